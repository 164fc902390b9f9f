// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONORATIO_CSV_H_
#define MONORATIO_CSV_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace monoratio {

// Shortest round-trip decimal form; "inf" / "-inf" / "nan" for non-finite.
std::string FormatDouble(double v);

// RFC-4180 field quoting: fields containing a comma, quote, CR or LF are
// wrapped in quotes with embedded quotes doubled.
std::string CsvEscape(std::string_view field);

class CsvRow {
 public:
  CsvRow& Add(std::string_view field);
  CsvRow& Add(const char* field) { return Add(std::string_view(field)); }
  CsvRow& Add(const std::string& field) { return Add(std::string_view(field)); }
  CsvRow& Add(double v);
  CsvRow& Add(int64_t v);
  CsvRow& Add(int v) { return Add(static_cast<int64_t>(v)); }
  CsvRow& Add(uint64_t v);

  const std::vector<std::string>& fields() const { return fields_; }
  // Joined and escaped, CRLF-free (callers choose the line ending).
  std::string ToString() const;

 private:
  std::vector<std::string> fields_;
};

inline std::ostream& operator<<(std::ostream& os, const CsvRow& row) {
  return os << row.ToString() << '\n';
}

// Minimal RFC-4180 reader for one line without embedded newlines.
std::vector<std::string> SplitCsvLine(std::string_view line);

}  // namespace monoratio

#endif  // MONORATIO_CSV_H_
