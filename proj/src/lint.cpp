#include "trigonal/lint.hpp"

#include "trigonal/errors.hpp"

namespace trigonal {

LinT& LinT::operator*=(const LinT& rhs) {
  if (!is_constant() && !rhs.is_constant()) {
    throw DegreeOverflow("product of two non-constant linear t-polynomials: (" + to_string() +
                         ") * (" + rhs.to_string() + ")");
  }
  if (is_constant()) {
    const Cyc3 s = c0_;
    c0_ = s * rhs.c0_;
    c1_ = s * rhs.c1_;
    c2_ = s * rhs.c2_;
  } else {
    const Cyc3& s = rhs.c0_;
    c0_ *= s;
    c1_ *= s;
    c2_ *= s;
  }
  return *this;
}

std::string LinT::to_string() const {
  std::string out;
  auto append = [&out](const Cyc3& c, const char* var) {
    if (c.is_zero()) {
      return;
    }
    if (!out.empty()) {
      out += " + ";
    }
    const bool compound = !c.a().is_zero() && !c.b().is_zero();
    std::string coeff = compound ? "(" + c.to_string() + ")" : c.to_string();
    if (*var == '\0') {
      out += coeff;
    } else if (coeff == "1") {
      out += var;
    } else {
      out += coeff + "*" + var;
    }
  };
  append(c0_, "");
  append(c1_, "t1");
  append(c2_, "t2");
  return out.empty() ? "0" : out;
}

}  // namespace trigonal
