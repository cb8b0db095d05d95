// Copyright 2026 The wps Authors
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
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wps {

/// Elements of F_q are stored as integer codes. The code of the element with
/// coordinates (c_0, ..., c_{k-1}) over F_p is sum c_i p^i, so the integer order
/// on codes is the canonical total order: residue order for prime fields and
/// lexicographic order (highest coordinate first) for extensions. Zero is code 0
/// and one is code 1.
using Code = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class FieldElement;

namespace detail {
struct FieldData;
}

/// A finite field F_q, q = p^k <= 2^16. Cheap to copy; all copies share one
/// immutable table set, and two Field handles are equal iff they share it.
class Field {
 public:
  /// Validates p and the modulus. When k > 1 and no modulus is given, the
  /// first irreducible monic polynomial of degree k in canonical order is used.
  static Field make(std::uint32_t p, unsigned k = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Accepts "q=P", "q=P^K:modulus=c0,...,cK" (ascending over F_p), and the
  /// shorthand forms "P", "P^K" and "Q" for a prime power Q.
  static Field parse(std::string_view spec);

  std::uint32_t p() const noexcept;
  unsigned k() const noexcept;
  std::uint32_t q() const noexcept;
  /// Ascending coefficients of the defining polynomial; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  std::string spec_string() const;

  // Raw arithmetic on codes. Callers guarantee codes are < q.
  Code add(Code a, Code b) const noexcept;
  Code sub(Code a, Code b) const noexcept;
  Code neg(Code a) const noexcept;
  Code mul(Code a, Code b) const noexcept;
  Code inv(Code a) const;  // throws DivisionByZero
  Code div(Code a, Code b) const;
  Code pow(Code a, std::uint64_t e) const noexcept;
  /// Inverse of the Frobenius x -> x^p.
  Code pth_root(Code a) const noexcept;

  std::vector<std::uint32_t> coords(Code a) const;
  Code from_coords(std::span<const std::uint32_t> coords) const;
  /// Reduces an integer into the prime subfield.
  Code from_int(long long n) const noexcept;
  std::string format(Code a) const;

  FieldElement element(Code a) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// All q elements in canonical order, zero first.
  std::vector<FieldElement> elements() const;

  /// A generator of the cyclic group F_q^x.
  Code generator() const noexcept;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.d_ == b.d_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

class FieldElement {
 public:
  FieldElement(Field field, Code code);

  const Field& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  std::vector<std::uint32_t> coords() const { return field_.coords(code_); }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {field_, field_.neg(code_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }
  /// Canonical order; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
    return a.code_ <=> b.code_;
  }

  std::string to_string() const { return field_.format(code_); }

 private:
  Field field_;
  Code code_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace wps
