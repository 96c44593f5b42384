// Copyright 2026 The pebblecert Authors
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

#include "pebble/rational.hpp"

#include <limits>

#include "pebble/error.hpp"

namespace pebble {

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) {
    throw invalid_argument("rational value does not fit in 64 bits");
  }
  return z.get_si();
}

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw parse_error("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw parse_error("rational '" + std::string(text) +
                                "' has zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow2(int exponent) {
  mpz_class z = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(exponent));
    return Rational(mpq_class(z));
  }
  mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(),
               static_cast<mp_bitcnt_t>(-exponent));
  return Rational(mpq_class(mpz_class(1), z));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::is_integer() const { return v_.get_den() == 1; }

std::int64_t Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_int64(q);
}

std::int64_t Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_int64(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw invalid_argument("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

}  // namespace pebble
