#include "z2sl/scalar.hpp"

#include <stdexcept>

namespace z2sl {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar::rational: zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::inverse() const {
  mpq_class n = re_ * re_ + im_ * im_;
  if (sgn(n) == 0) throw std::domain_error("Scalar::inverse: division by zero");
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

std::string imag_text(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "i";
}

mpq_class parse_rational(std::string_view t) {
  if (t.empty() || t == "+") return 1;
  if (t == "-") return -1;
  std::string s(t);
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Scalar::parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Scalar::parse: zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_text(im_);
  std::string s = re_.get_str();
  if (sgn(im_) > 0) s += "+";
  return s + imag_text(im_);
}

Scalar Scalar::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw std::invalid_argument("Scalar::parse: empty");
  if (auto k = t.find('i'); k != std::string::npos && k + 1 != t.size()) {
    // "i/2", "-i/2": pure imaginary with the unit written before the denominator
    if (k + 1 >= t.size() || t[k + 1] != '/') throw std::invalid_argument("Scalar::parse: bad '" + t + "'");
    std::string r = t.substr(0, k) + "1" + t.substr(k + 1);
    return Scalar(0, parse_rational(r));
  }
  if (t.back() != 'i') return Scalar(parse_rational(t));
  t.pop_back();
  // split real and imaginary parts at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if (t[k] == '+' || t[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Scalar(0, parse_rational(t));
  return Scalar(parse_rational(std::string_view(t).substr(0, split)),
                parse_rational(std::string_view(t).substr(split)));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace z2sl
