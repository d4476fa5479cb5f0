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


#include "wiretap/table_io.h"

#include <sstream>
#include <string>
#include <vector>

#include "wiretap/errors.h"

namespace wiretap {
namespace {

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

int ParseNonNegative(const std::string& token, std::size_t line) {
  if (token.empty() || token.size() > 3 ||
      token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, "expected a small non-negative integer, got '" +
                               token + "'");
  }
  return std::stoi(token);
}

}  // namespace

void WriteCodeTable(std::ostream& out, const CodeTable& table) {
  out << table.l() << ' ' << table.k() << '\n';
  for (const Bin& bin : table.bins()) {
    for (std::size_t i = 0; i < bin.size(); ++i) {
      if (i > 0) out << ' ';
      out << bin[i].ToString();
    }
    out << '\n';
  }
}

std::string FormatCodeTable(const CodeTable& table) {
  std::ostringstream out;
  WriteCodeTable(out, table);
  return out.str();
}

CodeTable ParseCodeTable(std::istream& in) {
  std::string line;
  std::size_t line_number = 0;
  // Header: first non-blank line.
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    header = Tokens(line);
    break;
  }
  if (header.empty()) throw ParseError(line_number, "missing 'l k' header");
  if (header.size() != 2) {
    throw ParseError(line_number, "header must be 'l k'");
  }
  const int l = ParseNonNegative(header[0], line_number);
  const int k = ParseNonNegative(header[1], line_number);
  if (k < 1) throw ParseError(line_number, "k must be >= 1");
  if (l + k > kMaxBlocklength) {
    throw ParseError(line_number, "blocklength " + std::to_string(l + k) +
                                      " exceeds the cap of " +
                                      std::to_string(kMaxBlocklength));
  }
  const std::size_t bin_count = std::size_t{1} << k;
  const std::size_t bin_size = std::size_t{1} << l;
  const std::size_t n = static_cast<std::size_t>(l + k);

  std::vector<Bin> bins;
  bins.reserve(bin_count);
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    if (bins.size() == bin_count) {
      throw ParseError(line_number, "more than " + std::to_string(bin_count) +
                                        " bin lines");
    }
    std::vector<std::string> tokens = Tokens(line);
    if (tokens.size() != bin_size) {
      throw ParseError(line_number, "bin has " + std::to_string(tokens.size()) +
                                        " codewords, expected " +
                                        std::to_string(bin_size));
    }
    Bin bin;
    bin.reserve(bin_size);
    for (const std::string& token : tokens) {
      if (token.size() != n ||
          token.find_first_not_of("01") != std::string::npos) {
        throw ParseError(line_number, "'" + token + "' is not a " +
                                          std::to_string(n) + "-bit word");
      }
      bin.push_back(Codeword::FromString(token));
    }
    bins.push_back(std::move(bin));
  }
  if (bins.size() != bin_count) {
    throw ParseError(line_number, "expected " + std::to_string(bin_count) +
                                      " bin lines, found " +
                                      std::to_string(bins.size()));
  }
  return CodeTable(l, k, std::move(bins));
}

CodeTable ParseCodeTable(const std::string& text) {
  std::istringstream in(text);
  return ParseCodeTable(in);
}

}  // namespace wiretap
