#include "whq/structures.hpp"

#include "whq/errors.hpp"
#include "whq/term.hpp"

namespace whq {

namespace {

void require_shape(const char* what, const Mor& m, std::size_t src, std::size_t dst) {
  if (m.src() != src) throw DimensionMismatch(std::string(what) + ": src", src, m.src());
  if (m.dst() != dst) throw DimensionMismatch(std::string(what) + ": dst", dst, m.dst());
}

void require_same_field(const Mor& a, const Mor& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("structure maps over different fields");
}

}  // namespace

UnitalMagma UnitalMagma::unchecked(const Mor& unit, const Mor& mul) {
  const std::size_t n = unit.dst();
  require_shape("unit", unit, 1, n);
  require_shape("mul", mul, n * n, n);
  require_same_field(unit, mul);
  return UnitalMagma(unit, mul);
}

UnitalMagma UnitalMagma::make(const Mor& unit, const Mor& mul) {
  UnitalMagma m = unchecked(unit, mul);
  require(m.check());
  return m;
}

Report UnitalMagma::check() const {
  const std::size_t n = dim();
  const Term id = Mor::identity(field(), n);
  Report r;
  r.expect_equal("(unit-right)", Term(mul_) * tensor(ident(n), unit_), id);
  r.expect_equal("(unit-left)", Term(mul_) * tensor(unit_, ident(n)), id);
  return r;
}

bool UnitalMagma::is_associative() const {
  const std::size_t n = dim();
  return !first_difference(Term(mul_) * tensor(mul_, ident(n)),
                           Term(mul_) * tensor(ident(n), mul_));
}

Comonoid Comonoid::unchecked(const Mor& counit, const Mor& comul) {
  const std::size_t n = counit.src();
  require_shape("counit", counit, n, 1);
  require_shape("comul", comul, n, n * n);
  require_same_field(counit, comul);
  return Comonoid(counit, comul);
}

Comonoid Comonoid::make(const Mor& counit, const Mor& comul) {
  Comonoid c = unchecked(counit, comul);
  require(c.check());
  return c;
}

Report Comonoid::check() const {
  const std::size_t n = dim();
  const Term id = Mor::identity(field(), n);
  Report r;
  r.expect_equal("(counit-left)", tensor(counit_, ident(n)) * comul_, id);
  r.expect_equal("(counit-right)", tensor(ident(n), counit_) * comul_, id);
  r.expect_equal("(coassociativity)", tensor(comul_, ident(n)) * comul_,
                 tensor(ident(n), comul_) * comul_);
  return r;
}

Mor convolution(const Mor& f, const Mor& g, const Comonoid& src, const UnitalMagma& dst) {
  require_shape("convolution f", f, src.dim(), dst.dim());
  require_shape("convolution g", g, src.dim(), dst.dim());
  return (Term(dst.mul()) * tensor(f, g) * src.comul()).eval();
}

bool is_magma_morphism(const Mor& f, const UnitalMagma& a, const UnitalMagma& b) {
  require_shape("magma morphism", f, a.dim(), b.dim());
  return compose(f, a.unit()) == b.unit() &&
         !first_difference(Term(b.mul()) * tensor(f, f), Term(f) * a.mul());
}

bool is_comonoid_morphism(const Mor& f, const Comonoid& d, const Comonoid& e) {
  require_shape("comonoid morphism", f, d.dim(), e.dim());
  return compose(e.counit(), f) == d.counit() &&
         !first_difference(Term(e.comul()) * f, tensor(f, f) * d.comul());
}

UnitalMagma tensor_magma(const UnitalMagma& a, const UnitalMagma& b) {
  const std::size_t m = a.dim();
  const std::size_t n = b.dim();
  const Mor mul =
      (tensor(a.mul(), b.mul()) * tensor(ident(m), braid(n, m), ident(n))).eval(a.field());
  return UnitalMagma::make(kron(a.unit(), b.unit()), mul);
}

Comonoid tensor_comonoid(const Comonoid& d, const Comonoid& e) {
  const std::size_t m = d.dim();
  const std::size_t n = e.dim();
  const Mor comul =
      (tensor(ident(m), braid(m, n), ident(n)) * tensor(d.comul(), e.comul())).eval(d.field());
  return Comonoid::make(kron(d.counit(), e.counit()), comul);
}

}  // namespace whq
