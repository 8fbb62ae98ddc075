#include "charvar/trace.hpp"

#include <cstdlib>

#include "charvar/errors.hpp"
#include "charvar/polyalg.hpp"

namespace charvar {

TraceCoords TraceCoords::standard() {
  static const Vars vars = make_vars({"x", "y", "z"});
  return {MultiPoly::variable(vars, "x"), MultiPoly::variable(vars, "y"), MultiPoly::variable(vars, "z")};
}

QuadBasisElem QuadBasisElem::identity(const Vars& vars) {
  const MultiPoly zero(vars);
  return {MultiPoly::constant(vars, 1), zero, zero, zero};
}

MultiPoly QuadBasisElem::trace(const TraceCoords& c) const {
  return one * Rational(2) + c.x * a + c.y * b + c.z * ab;
}

namespace {

QuadBasisElem times_a(const QuadBasisElem& e, const TraceCoords& c) {
  return {-e.a, e.one + c.x * e.a, -e.ab, e.b + c.x * e.ab};
}

QuadBasisElem times_b(const QuadBasisElem& e, const TraceCoords& c, const MultiPoly& z_minus_xy) {
  return {z_minus_xy * e.a - e.b - c.x * e.ab, c.y * e.a + e.ab,
          e.one + c.x * e.a + c.y * e.b + c.z * e.ab, -e.a};
}

QuadBasisElem scaled_minus(const MultiPoly& s, const QuadBasisElem& e, const QuadBasisElem& f) {
  return {s * e.one - f.one, s * e.a - f.a, s * e.b - f.b, s * e.ab - f.ab};
}

}  // namespace

QuadBasisElem left_multiply(const Letter& unit, const QuadBasisElem& e, const TraceCoords& c) {
  if (std::abs(unit.exp) != 1) throw UnsupportedInput("left_multiply: exponent must be +1 or -1");
  const MultiPoly z_minus_xy = c.z - c.x * c.y;
  if (unit.gen == Generator::First) {
    QuadBasisElem ae = times_a(e, c);
    return unit.exp > 0 ? ae : scaled_minus(c.x, e, ae);
  }
  QuadBasisElem be = times_b(e, c, z_minus_xy);
  return unit.exp > 0 ? be : scaled_minus(c.y, e, be);
}

QuadBasisElem fold(const FreeWord& word, const TraceCoords& c) {
  const MultiPoly z_minus_xy = c.z - c.x * c.y;
  QuadBasisElem e = QuadBasisElem::identity(c.vars());
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    for (int i = 0; i < std::abs(it->exp); ++i) {
      if (it->gen == Generator::First) {
        QuadBasisElem ae = times_a(e, c);
        e = it->exp > 0 ? std::move(ae) : scaled_minus(c.x, e, ae);
      } else {
        QuadBasisElem be = times_b(e, c, z_minus_xy);
        e = it->exp > 0 ? std::move(be) : scaled_minus(c.y, e, be);
      }
    }
  }
  return e;
}

MultiPoly trace_poly(const FreeWord& word) { return trace_poly(word, TraceCoords::standard()); }

MultiPoly trace_poly(const FreeWord& word, const TraceCoords& coords) {
  return fold(reduce(word), coords).trace(coords);
}

MultiPoly chebyshev(ChebyshevKind which, const Vars& vars, std::string_view var) {
  const MultiPoly y = MultiPoly::variable(vars, var);
  MultiPoly f0 = MultiPoly::constant(vars, which.kind == ChebyshevKind::Kind::S ? 1 : 2);
  MultiPoly f1 = y;
  const int k = which.index;
  if (k == 0) return f0;
  if (k > 0) {
    for (int i = 1; i < k; ++i) {
      MultiPoly next = y * f1 - f0;
      f0 = std::move(f1);
      f1 = std::move(next);
    }
    return f1;
  }
  // f_{j-1} = y f_j - f_{j+1}
  MultiPoly cur = f0;
  MultiPoly above = f1;
  for (int i = 0; i < -k; ++i) {
    MultiPoly below = y * cur - above;
    above = std::move(cur);
    cur = std::move(below);
  }
  return cur;
}

MultiPoly chebyshev_s(int k, const Vars& vars, std::string_view var) {
  return chebyshev({ChebyshevKind::Kind::S, k}, vars, var);
}

MultiPoly chebyshev_t(int k, const Vars& vars, std::string_view var) {
  return chebyshev({ChebyshevKind::Kind::T, k}, vars, var);
}

}  // namespace charvar
