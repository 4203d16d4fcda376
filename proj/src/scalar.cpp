#include "cartankit/scalar.hpp"

#include <cctype>
#include <ostream>

namespace cartan {

Scalar Scalar::frac(long num, long den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar &Scalar::operator+=(const Scalar &o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0)
    im_ += o.im_;
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0)
    im_ -= o.im_;
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero())
    throw std::domain_error("inverse of zero scalar");
  if (sgn(im_) == 0)
    return Scalar(mpq_class(1) / re_);
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

std::strong_ordering operator<=>(const Scalar &a, const Scalar &b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0)
    c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::str() const {
  if (sgn(im_) == 0)
    return re_.get_str();
  std::string im = (im_ == 1) ? "" : (im_ == -1 ? "-" : im_.get_str() + "*");
  if (sgn(re_) == 0)
    return im + "i";
  if (sgn(im_) > 0)
    return re_.get_str() + "+" + im + "i";
  return re_.get_str() + im + "i";
}

namespace {

mpq_class parse_rational(const std::string &s) {
  if (s.empty())
    throw std::invalid_argument("empty rational");
  size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size())
    throw std::invalid_argument("bad rational '" + s + "'");
  int slashes = 0;
  for (size_t k = start; k < s.size(); ++k) {
    if (s[k] == '/') {
      ++slashes;
      if (k == start || k + 1 == s.size())
        throw std::invalid_argument("bad rational '" + s + "'");
    } else if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw std::invalid_argument("bad rational '" + s + "'");
    }
  }
  if (slashes > 1)
    throw std::invalid_argument("bad rational '" + s + "'");
  std::string body = s[0] == '+' ? s.substr(1) : s;
  mpq_class q;
  if (q.set_str(body, 10) != 0)
    throw std::invalid_argument("bad rational '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Coefficient of an imaginary term: "", "+", "-", "3", "-1/2", each optionally followed by '*'.
mpq_class parse_imag_coeff(std::string s) {
  if (!s.empty() && s.back() == '*')
    s.pop_back();
  if (s.empty() || s == "+")
    return 1;
  if (s == "-")
    return -1;
  return parse_rational(s);
}

} // namespace

Scalar Scalar::parse(const std::string &raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw std::invalid_argument("empty scalar");
  if (s.back() != 'i')
    return Scalar(parse_rational(s));
  s.pop_back();
  // split real and imaginary part at the last sign not in leading position
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '*') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos)
    return Scalar(mpq_class(0), parse_imag_coeff(s));
  return Scalar(parse_rational(s.substr(0, split)), parse_imag_coeff(s.substr(split)));
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

} // namespace cartan
