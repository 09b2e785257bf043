#include "hermex/gaussian.hpp"

#include "hermex/error.hpp"

#include <cctype>

namespace hermex {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return mpq_class(1);
  if (text == "-") return mpq_class(-1);
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0 || s.find('/') == s.size() - 1) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  mpq_class d = o.norm2();
  if (sgn(d) == 0) throw std::domain_error("division by zero Gaussian rational");
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Gaussian Gaussian::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InputError("empty scalar");
  if (s.back() != 'i') return Gaussian(parse_rational(s, text));
  std::string body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Gaussian(mpq_class(0), parse_rational(body, text));
  return Gaussian(parse_rational(std::string_view(body).substr(0, split), text),
                  parse_rational(std::string_view(body).substr(split), text));
}

std::string Gaussian::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag_part;
  if (im_ == 1) {
    imag_part = "i";
  } else if (im_ == -1) {
    imag_part = "-i";
  } else {
    imag_part = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag_part;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag_part;
}

}  // namespace hermex
