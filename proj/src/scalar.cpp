#include "mstar/scalar.hpp"

#include <cctype>

#include "mstar/error.hpp"

namespace mstar {

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  mpq_class n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorKind::invalid_argument, "division by zero in Q(i)");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

namespace {

mpq_class parse_rational(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorKind::parse_error, "empty rational in '" + std::string(whole) + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/') {
      throw Error(ErrorKind::parse_error, "bad scalar '" + std::string(whole) + "'");
    }
  }
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0) {
    throw Error(ErrorKind::parse_error, "bad scalar '" + std::string(whole) + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw Error(ErrorKind::parse_error, "zero denominator in '" + std::string(whole) + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace

Gaussian Gaussian::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::parse_error, "empty scalar");
  mpq_class re(0), im(0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw Error(ErrorKind::parse_error, "bad scalar '" + s + "'");
    bool imag = term.back() == 'i';
    if (imag) {
      term.remove_suffix(1);
      if (!term.empty() && term.back() == '*') term.remove_suffix(1);
      mpq_class c = term.empty() ? mpq_class(1) : parse_rational(term, s);
      im += sign * c;
    } else {
      re += sign * parse_rational(term, s);
    }
    pos = end;
  }
  return {re, im};
}

std::string Gaussian::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  mpq_class a = abs(im_);
  if (sgn(im_) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (a != 1) out += a.get_str() + "*";
  out += "i";
  return out;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t k) {
  Vec v(n);
  v.at(k) = Gaussian(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

Vec scale(const Gaussian& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& a, const Gaussian& c, const Vec& b) {
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!b[k].is_zero()) a[k] += c * b[k];
  }
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].to_string();
  }
  return out + ")";
}

std::string key_of(const Vec& v) {
  std::string out;
  for (const auto& c : v) {
    out += c.re().get_str();
    out += ',';
    out += c.im().get_str();
    out += ';';
  }
  return out;
}

}  // namespace mstar
