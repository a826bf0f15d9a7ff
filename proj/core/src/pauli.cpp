// Copyright 2026 The aqcode Authors
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

#include "aqcode/pauli.hpp"

#include <stdexcept>

#include "aqcode/errors.hpp"

namespace aqcode {

namespace {

void require_same_n(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("Pauli operands act on " + std::to_string(p.num_qubits()) +
                         " and " + std::to_string(q.num_qubits()) + " qubits");
  }
}

}  // namespace

PauliString PauliString::single(std::size_t n, std::size_t qubit, char letter) {
  if (qubit >= n) throw ParameterError("qubit index out of range");
  BitVec x(n), z(n);
  int phase = 0;
  switch (letter) {
    case 'X':
      x.set(qubit);
      break;
    case 'Z':
      z.set(qubit);
      break;
    case 'Y':
      x.set(qubit);
      z.set(qubit);
      phase = 1;  // Y = i XZ
      break;
    default:
      throw ParameterError(std::string("not a Pauli letter: ") + letter);
  }
  return PauliString(std::move(x), std::move(z), phase);
}

PauliString PauliString::from_bits(BitVec x, BitVec z, int phase) {
  if (x.size() != z.size()) throw DimensionError("x and z bit vectors differ in length");
  return PauliString(std::move(x), std::move(z), ((phase % 4) + 4) % 4);
}

PauliString PauliString::x_on(std::size_t n, std::initializer_list<std::size_t> qubits) {
  BitVec x(n);
  for (std::size_t q : qubits) x.set(q);
  return PauliString(std::move(x), BitVec(n), 0);
}

PauliString PauliString::z_on(std::size_t n, std::initializer_list<std::size_t> qubits) {
  BitVec z(n);
  for (std::size_t q : qubits) z.set(q);
  return PauliString(BitVec(n), std::move(z), 0);
}

char PauliString::letter(std::size_t q) const {
  const bool x = x_.bit(q), z = z_.bit(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliString::symplectic_product(const PauliString& o) const {
  require_same_n(*this, o);
  return (BitVec::parity_and(x_, o.z_) ^ BitVec::parity_and(z_, o.x_)) ? 1 : 0;
}

PauliString PauliString::operator*(const PauliString& o) const {
  require_same_n(*this, o);
  // Moving the right factor's X bits through the left factor's Z bits picks
  // up (-1) per overlap: i^2 each.
  const int phase = phase_ + o.phase_ + 2 * static_cast<int>(BitVec::popcount_and(z_, o.x_));
  return PauliString(x_ ^ o.x_, z_ ^ o.z_, phase);
}

PauliString PauliString::inverse() const {
  // (X^x Z^z)^-1 = Z^z X^x = (-1)^{|x&z|} X^x Z^z.
  const int phase = -static_cast<int>(phase_) + 2 * static_cast<int>(BitVec::popcount_and(x_, z_));
  return PauliString(x_, z_, ((phase % 4) + 4) % 4);
}

int PauliString::compare_bits(const PauliString& a, const PauliString& b) {
  if (int c = BitVec::compare(a.x_, b.x_); c != 0) return c;
  return BitVec::compare(a.z_, b.z_);
}

PauliString parse_pauli(std::string_view text, std::size_t n) {
  int sign_exponent = 0;
  std::string_view body = text;
  if (body.starts_with("+i")) {
    sign_exponent = 1;
    body.remove_prefix(2);
  } else if (body.starts_with("-i")) {
    sign_exponent = 3;
    body.remove_prefix(2);
  } else if (body.starts_with("+")) {
    body.remove_prefix(1);
  } else if (body.starts_with("-")) {
    sign_exponent = 2;
    body.remove_prefix(1);
  }
  if (body.size() != n) {
    throw ParseError("Pauli text \"" + std::string(text) + "\" has " +
                     std::to_string(body.size()) + " letters, expected " + std::to_string(n));
  }
  BitVec x(n), z(n);
  int y_count = 0;
  for (std::size_t q = 0; q < n; ++q) {
    switch (body[q]) {
      case 'I':
        break;
      case 'X':
        x.set(q);
        break;
      case 'Z':
        z.set(q);
        break;
      case 'Y':
        x.set(q);
        z.set(q);
        ++y_count;
        break;
      default:
        throw ParseError("Pauli text \"" + std::string(text) + "\" has bad character '" +
                         std::string(1, body[q]) + "' at qubit " + std::to_string(q));
    }
  }
  return PauliString::from_bits(std::move(x), std::move(z), sign_exponent + y_count);
}

PauliString parse_pauli(std::string_view text) {
  std::string_view body = text;
  if (body.starts_with("+i") || body.starts_with("-i")) {
    body.remove_prefix(2);
  } else if (body.starts_with("+") || body.starts_with("-")) {
    body.remove_prefix(1);
  }
  return parse_pauli(text, body.size());
}

std::string format_pauli(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  std::string letters;
  letters.reserve(n);
  int y_count = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const char c = p.letter(q);
    if (c == 'Y') ++y_count;
    letters.push_back(c);
  }
  // Rewriting each XZ factor as -iY moves 3 units of i-exponent into the sign.
  switch ((p.phase() + 3 * y_count) % 4) {
    case 0:
      return letters;
    case 1:
      return "+i" + letters;
    case 2:
      return "-" + letters;
    default:
      return "-i" + letters;
  }
}

}  // namespace aqcode
