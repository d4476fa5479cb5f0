/*
 * Copyright 2026 The Wiretap LP Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Plain-text code table format:
//
//   l k
//   <bin 1: 2^l space-separated bit strings>
//   ...
//   <bin 2^k>
//
// One bin per line. Writing then parsing returns the identical ordered
// table.

#ifndef WIRETAP_TABLE_IO_H_
#define WIRETAP_TABLE_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "wiretap/bitcore.h"

namespace wiretap {

void WriteCodeTable(std::ostream& out, const CodeTable& table);
std::string FormatCodeTable(const CodeTable& table);

// Throws ParseError naming the offending line. Only the shape is checked
// here; use ValidateTable for the partition property.
CodeTable ParseCodeTable(std::istream& in);
CodeTable ParseCodeTable(const std::string& text);

}  // namespace wiretap

#endif  // WIRETAP_TABLE_IO_H_
