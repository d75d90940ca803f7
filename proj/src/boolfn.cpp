// Copyright 2026 The djsynth Authors
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

#include "djsynth/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace djsynth {

namespace {

std::uint64_t qubit_mask(int num_qubits, int qubit) {
    return std::uint64_t{1} << (num_qubits - qubit);
}

void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(num_qubits) + " outside 1.." +
                                    std::to_string(kMaxQubits));
    }
}

}  // namespace

TruthTable::TruthTable(int num_qubits, std::vector<std::uint8_t> values)
    : num_qubits_(num_qubits), values_(std::move(values)) {
    check_qubit_count(num_qubits_);
    if (values_.size() != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument("truth table for " + std::to_string(num_qubits_) + " qubits needs " +
                                    std::to_string(std::size_t{1} << num_qubits_) + " entries, got " +
                                    std::to_string(values_.size()));
    }
    for (auto v : values_) {
        if (v > 1) {
            throw std::invalid_argument("truth table entries must be 0 or 1");
        }
    }
}

TruthTable TruthTable::parse(std::string_view text) {
    std::vector<std::uint8_t> values;
    values.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (c != '0' && c != '1') {
            std::ostringstream msg;
            msg << "non-binary character '" << c << "' at position " << i << " of truth table";
            throw std::invalid_argument(msg.str());
        }
        values.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (text.size() < 2 || !std::has_single_bit(text.size())) {
        throw std::invalid_argument("truth table length " + std::to_string(text.size()) +
                                    " is not a power of two >= 2");
    }
    int n = std::countr_zero(text.size());
    return TruthTable(n, std::move(values));
}

std::size_t TruthTable::weight() const {
    return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), std::uint8_t{1}));
}

std::string TruthTable::str() const {
    std::string out;
    out.reserve(values_.size());
    for (auto v : values_) {
        out.push_back(v ? '1' : '0');
    }
    return out;
}

std::strong_ordering TruthTable::operator<=>(const TruthTable &other) const {
    if (auto c = num_qubits_ <=> other.num_qubits_; c != 0) {
        return c;
    }
    return values_ <=> other.values_;
}

std::strong_ordering Monomial::operator<=>(const Monomial &other) const {
    if (auto c = qubits.size() <=> other.qubits.size(); c != 0) {
        return c;
    }
    return qubits <=> other.qubits;
}

Anf::Anf(int num_qubits, std::vector<Monomial> monomials)
    : num_qubits_(num_qubits), monomials_(std::move(monomials)) {
    check_qubit_count(num_qubits_);
    for (auto &m : monomials_) {
        std::sort(m.qubits.begin(), m.qubits.end());
        if (std::adjacent_find(m.qubits.begin(), m.qubits.end()) != m.qubits.end()) {
            throw std::invalid_argument("monomial repeats a variable");
        }
        for (int q : m.qubits) {
            if (q < 1 || q > num_qubits_) {
                throw std::invalid_argument("monomial variable x" + std::to_string(q) + " outside 1.." +
                                            std::to_string(num_qubits_));
            }
        }
    }
    std::sort(monomials_.begin(), monomials_.end());
    if (std::adjacent_find(monomials_.begin(), monomials_.end()) != monomials_.end()) {
        throw std::invalid_argument("duplicate monomial in algebraic normal form");
    }
}

bool Anf::has_constant_term() const {
    return !monomials_.empty() && monomials_.front().is_constant();
}

bool Anf::evaluate(std::uint64_t x) const {
    bool acc = false;
    for (const auto &m : monomials_) {
        bool term = std::all_of(m.qubits.begin(), m.qubits.end(),
                                [&](int q) { return (x & qubit_mask(num_qubits_, q)) != 0; });
        acc ^= term;
    }
    return acc;
}

std::string Anf::str() const {
    if (monomials_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &m : monomials_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        if (m.is_constant()) {
            out << "1";
        }
        for (int q : m.qubits) {
            out << "x" << q;
        }
    }
    return out.str();
}

const char *function_class_name(FunctionClass c) {
    switch (c) {
        case FunctionClass::Constant0:
            return "constant0";
        case FunctionClass::Constant1:
            return "constant1";
        case FunctionClass::Balanced:
            return "balanced";
        case FunctionClass::Other:
            return "other";
    }
    return "?";
}

FunctionClass classify(const TruthTable &table) {
    std::size_t w = table.weight();
    if (w == 0) {
        return FunctionClass::Constant0;
    }
    if (w == table.size()) {
        return FunctionClass::Constant1;
    }
    if (2 * w == table.size()) {
        return FunctionClass::Balanced;
    }
    return FunctionClass::Other;
}

bool satisfies_promise(const TruthTable &table) {
    return classify(table) != FunctionClass::Other;
}

namespace {

// In-place butterfly over GF(2): for each axis, XOR the lower half into the
// upper half. Self-inverse, so it serves both directions.
std::vector<std::uint8_t> reed_muller_butterfly(std::span<const std::uint8_t> in) {
    std::vector<std::uint8_t> a(in.begin(), in.end());
    for (std::size_t step = 1; step < a.size(); step <<= 1) {
        for (std::size_t i = 0; i < a.size(); i++) {
            if (i & step) {
                a[i] ^= a[i ^ step];
            }
        }
    }
    return a;
}

}  // namespace

Anf moebius_transform(const TruthTable &table) {
    int n = table.num_qubits();
    auto coeffs = reed_muller_butterfly(table.values());
    std::vector<Monomial> monomials;
    for (std::size_t i = 0; i < coeffs.size(); i++) {
        if (!coeffs[i]) {
            continue;
        }
        Monomial m;
        for (int q = 1; q <= n; q++) {
            if (i & qubit_mask(n, q)) {
                m.qubits.push_back(q);
            }
        }
        monomials.push_back(std::move(m));
    }
    return Anf(n, std::move(monomials));
}

TruthTable anf_to_truth_table(const Anf &anf) {
    int n = anf.num_qubits();
    check_qubit_count(n);
    std::vector<std::uint8_t> coeffs(std::size_t{1} << n, 0);
    for (const auto &m : anf.monomials()) {
        std::uint64_t index = 0;
        for (int q : m.qubits) {
            index |= qubit_mask(n, q);
        }
        coeffs[index] = 1;
    }
    return TruthTable(n, reed_muller_butterfly(coeffs));
}

std::size_t degree(const Anf &anf) {
    std::size_t d = 0;
    for (const auto &m : anf.monomials()) {
        d = std::max(d, m.degree());
    }
    return d;
}

TruthTable complement(const TruthTable &table) {
    std::vector<std::uint8_t> values(table.values().begin(), table.values().end());
    for (auto &v : values) {
        v ^= 1;
    }
    return TruthTable(table.num_qubits(), std::move(values));
}

TruthTable canonical(const TruthTable &table) {
    return table[0] ? complement(table) : table;
}

namespace {

void check_enumeration_range(int num_qubits, int lo) {
    if (num_qubits < lo || num_qubits > kMaxEnumerationQubits) {
        throw std::invalid_argument("enumeration supports " + std::to_string(lo) + " <= n <= " +
                                    std::to_string(kMaxEnumerationQubits) + ", got n=" +
                                    std::to_string(num_qubits));
    }
}

// Truth table whose bit sequence, read with index 0 as the leading digit,
// spells `word`.
TruthTable table_from_word(int num_qubits, std::uint64_t word) {
    std::size_t len = std::size_t{1} << num_qubits;
    std::vector<std::uint8_t> values(len);
    for (std::size_t i = 0; i < len; i++) {
        values[i] = static_cast<std::uint8_t>((word >> (len - 1 - i)) & 1);
    }
    return TruthTable(num_qubits, std::move(values));
}

}  // namespace

std::vector<TruthTable> enumerate_balanced(int num_qubits) {
    check_enumeration_range(num_qubits, kMinEnumerationQubits);
    std::size_t len = std::size_t{1} << num_qubits;
    std::vector<TruthTable> out;
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << len); word++) {
        if (static_cast<std::size_t>(std::popcount(word)) * 2 == len) {
            out.push_back(table_from_word(num_qubits, word));
        }
    }
    return out;
}

std::vector<TruthTable> enumerate_balanced_classes(int num_qubits) {
    auto all = enumerate_balanced(num_qubits);
    std::vector<TruthTable> out;
    for (auto &t : all) {
        if (!t[0]) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<TruthTable> enumerate_all(int num_qubits) {
    check_enumeration_range(num_qubits, 1);
    std::size_t len = std::size_t{1} << num_qubits;
    std::vector<TruthTable> out;
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << len); word++) {
        out.push_back(table_from_word(num_qubits, word));
    }
    return out;
}

}  // namespace djsynth
