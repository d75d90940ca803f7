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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace djsynth {

/// Largest register size supported anywhere in the library.
inline constexpr int kMaxQubits = 20;

/// Boolean function f: {0,1}^n -> {0,1} stored as its 2^n output bits.
///
/// Entry i holds f(b1 b2 ... bn) where b1 is the most significant bit of i,
/// so qubit 1 is the MSB and qubit n the LSB. The text form is the bit
/// sequence itself, index 0 leftmost.
class TruthTable {
   public:
    /// Throws std::invalid_argument unless 1 <= n <= kMaxQubits, values has
    /// exactly 2^n entries, and every entry is 0 or 1.
    TruthTable(int num_qubits, std::vector<std::uint8_t> values);

    /// Parses a bare '0'/'1' string whose length is a power of two >= 2.
    static TruthTable parse(std::string_view text);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return values_.size(); }
    bool operator[](std::size_t index) const { return values_[index] != 0; }
    std::span<const std::uint8_t> values() const { return values_; }

    /// Number of inputs mapped to 1.
    std::size_t weight() const;
    std::string str() const;

    bool operator==(const TruthTable &) const = default;
    /// Orders by the integer value of the bit sequence read with index 0 as
    /// the most significant digit (tables of equal size only).
    std::strong_ordering operator<=>(const TruthTable &other) const;

   private:
    int num_qubits_;
    std::vector<std::uint8_t> values_;
};

/// Product of the listed variables; the empty product is the constant 1.
/// Qubits are 1-based and kept sorted ascending.
struct Monomial {
    std::vector<int> qubits;

    std::size_t degree() const { return qubits.size(); }
    bool is_constant() const { return qubits.empty(); }

    bool operator==(const Monomial &) const = default;
    /// Degree first, then lexicographic.
    std::strong_ordering operator<=>(const Monomial &other) const;
};

/// Algebraic normal form: XOR of distinct monomials over n variables.
class Anf {
   public:
    explicit Anf(int num_qubits) : num_qubits_(num_qubits) {}
    /// Sorts each monomial and the list. Throws std::invalid_argument on an
    /// out-of-range qubit, a repeated qubit in one monomial, or a repeated
    /// monomial.
    Anf(int num_qubits, std::vector<Monomial> monomials);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Monomial> &monomials() const { return monomials_; }
    bool empty() const { return monomials_.empty(); }
    bool has_constant_term() const;

    /// Evaluates the polynomial at basis index x (qubit 1 = MSB).
    bool evaluate(std::uint64_t x) const;

    /// Human-readable form such as "x3 + x1x2"; "0" for the empty form.
    std::string str() const;

    bool operator==(const Anf &) const = default;

   private:
    int num_qubits_;
    std::vector<Monomial> monomials_;
};

enum class FunctionClass { Constant0, Constant1, Balanced, Other };

const char *function_class_name(FunctionClass c);

FunctionClass classify(const TruthTable &table);

/// True for Constant0, Constant1 and Balanced.
bool satisfies_promise(const TruthTable &table);

/// Binary Moebius (Reed-Muller) transform, truth table to ANF.
Anf moebius_transform(const TruthTable &table);

/// Inverse of moebius_transform.
TruthTable anf_to_truth_table(const Anf &anf);

/// Size of the largest monomial; 0 for the empty form.
std::size_t degree(const Anf &anf);

TruthTable complement(const TruthTable &table);

/// Member of {t, complement(t)} with f(index 0) = 0.
TruthTable canonical(const TruthTable &table);

inline constexpr int kMinEnumerationQubits = 2;
inline constexpr int kMaxEnumerationQubits = 4;

/// All truth tables of weight 2^(n-1), ascending. Requires 2 <= n <= 4.
std::vector<TruthTable> enumerate_balanced(int num_qubits);

/// Canonical members of enumerate_balanced(n), ascending.
std::vector<TruthTable> enumerate_balanced_classes(int num_qubits);

/// Every truth table on n qubits, ascending. Requires 1 <= n <= 4.
std::vector<TruthTable> enumerate_all(int num_qubits);

}  // namespace djsynth
