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


// Ni code tables.
//
// Two recursive steps grow a table one bit at a time:
//   Rasba (k -> k+1): bin i spawns two bins. The first appends 0 to the
//     words at even 0-based positions and 1 to the others; the second
//     appends the opposite bits.
//   Rahba (l -> l+1): bins are taken in pairs (X, Y). The new first bin is
//     [X||0 ; Y||1] and the new second bin is [X||1 ; Y||0].
// The standard table of form (l, k) starts from [[0], [1]], applies Rahba
// l times and then Rasba k-1 times. All appends are on the right.
//
// The closed form builds the same table directly: the two bins of form
// (l, 1) come from an alternating leading column plus a column-reversed
// reflected Gray code (upside down for the second bin), and each further
// message bit appends the alternating column or its complement.

#ifndef WIRETAP_NI_CODE_H_
#define WIRETAP_NI_CODE_H_

#include <span>
#include <utility>
#include <vector>

#include "wiretap/bitcore.h"
#include "wiretap/combinatorics.h"

namespace wiretap {

struct FormId {
  int l = 0;
  int k = 1;
  int n() const { return l + k; }

  friend bool operator==(const FormId&, const FormId&) = default;
};

// Throws UsageError unless l >= 0, k >= 1 and n <= kMaxBlocklength.
void RequireValidForm(const FormId& form);

// Form (l, k+1) from a valid form-(l, k) table.
CodeTable Rasba(const CodeTable& table);

// Form (l+1, k) from a valid form-(l, k) table.
CodeTable Rahba(const CodeTable& table);

CodeTable BaseTable();

CodeTable StandardTable(const FormId& form);

// Number of monotone construction paths between two forms:
// C(n2 - n1, k2 - k1). Requires to.l >= from.l >= 1 and to.k >= from.k.
BigInt PathCount(const FormId& from, const FormId& to);

// Row r is the reflected Gray code of r with its l bits in reverse order.
// Requires l >= 1.
std::vector<Codeword> GrayMatrix(int l);

// The two bins of form (l, 1). Requires l >= 1.
std::pair<Bin, Bin> ClosedFormFfBins(int l);

// Requires l >= 1 and k >= 1. Bin b extends first-form bin b >> (k-1); the
// remaining k-1 bits of b, most significant first, select for each
// appended column whether it is the alternating column or its complement.
CodeTable ClosedFormTable(const FormId& form);

// True iff every bin is {w, ~w}. Throws UsageError unless l == 1.
bool OppositePairingCheck(const CodeTable& table);

// Largest |rate(a, p) - rate(b, p)| over `ps`. Used to measure how far two
// construction paths to the same form drift apart.
double MaxEquivocationGap(const CodeTable& a, const CodeTable& b,
                          std::span<const double> ps);

}  // namespace wiretap

#endif  // WIRETAP_NI_CODE_H_
