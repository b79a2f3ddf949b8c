// Copyright 2026 The negsssp Authors
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

#include "negsssp/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace negsssp {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return infinity();
  if (text.empty()) bad(text);

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool neg = !num.empty() && (num[0] == '-' || num[0] == '+');
    std::string_view digits = neg ? num.substr(1) : num;
    if (!all_digits(digits) || !all_digits(den)) bad(text);
    mpz_class d{std::string(den)};
    if (d == 0) bad(text);
    mpq_class q(mpz_class(std::string(digits)), d);
    q.canonicalize();
    if (num[0] == '-') q = -q;
    return Rational(q);
  }

  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  std::string mantissa;
  long frac_digits = 0;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (mantissa.empty()) bad(text);
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') bad(text);
    std::string_view ex = text.substr(i + 1);
    bool eneg = false;
    if (!ex.empty() && (ex[0] == '-' || ex[0] == '+')) {
      eneg = ex[0] == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 6) bad(text);
    exponent = std::stol(std::string(ex));
    if (eneg) exponent = -exponent;
  }
  exponent -= frac_digits;
  mpz_class m(mantissa);
  mpq_class q;
  if (exponent >= 0) {
    q = mpq_class(m * pow10(exponent));
  } else {
    q = mpq_class(m, pow10(-exponent));
    q.canonicalize();
  }
  if (neg) q = -q;
  return Rational(q);
}

double Rational::to_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return v_.get_d();
}

std::string Rational::to_string() const {
  if (inf_) return "inf";
  return v_.get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  if (inf_ || o.inf_) {
    inf_ = true;
    return *this;
  }
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (o.inf_) throw std::domain_error("subtracting infinity");
  if (inf_) return *this;
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (inf_ || o.inf_) {
    if ((inf_ ? o.v_ : v_) < 0 && !(inf_ && o.inf_)) {
      throw std::domain_error("negative infinity");
    }
    inf_ = true;
    return *this;
  }
  v_ *= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  if (inf_) throw std::domain_error("negating infinity");
  return Rational(mpq_class(-v_));
}

}  // namespace negsssp
