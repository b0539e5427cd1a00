#include "arrtop/scalar.hpp"

#include <cctype>

namespace arrtop {

std::string_view field_name(Field f) { return f == Field::Q ? "Q" : "Q(i)"; }

Field parse_field_name(std::string_view name) {
  if (name == "Q") return Field::Q;
  if (name == "Q(i)") return Field::QI;
  throw ParseError("unknown field '" + std::string(name) + "' (expected \"Q\" or \"Q(i)\")");
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw ParseError("empty scalar");
  if (compact.back() != 'i') {
    Rational q = parse_rational(compact);
    return f == Field::Q ? Scalar(q) : Scalar(q, 0);
  }
  if (f == Field::Q) throw ParseError("imaginary value '" + std::string(text) + "' in a Q document");
  // a+bi, a-bi, bi, i, -i: split at the last sign that is not the first char.
  std::string body = compact.substr(0, compact.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "0" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return Scalar(parse_rational(re_part), parse_rational(im_part));
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  r.im_ = -r.im_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (field_ == Field::Q) return Scalar(1 / re_);
  Rational n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar Scalar::in_field(Field f) const {
  if (f == field_) return *this;
  if (f == Field::QI) return Scalar(re_, 0);
  if (sgn(im_) != 0) throw std::invalid_argument("non-real scalar cannot move to Q");
  return Scalar(re_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  re_ += o.re_;
  if (field_ == Field::QI) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  re_ -= o.re_;
  if (field_ == Field::QI) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_ == Field::Q) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  return r;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return a.field_ <=> b.field_;
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (field_ == Field::Q || sgn(im_) == 0) return rational_to_string(re_);
  std::string im = sgn(im_) < 0 ? "-" : "+";
  Rational a = abs(im_);
  if (a != 1) im += rational_to_string(a);
  im += "i";
  if (sgn(re_) == 0) return im.front() == '+' ? im.substr(1) : im;
  return rational_to_string(re_) + im;
}

}  // namespace arrtop
