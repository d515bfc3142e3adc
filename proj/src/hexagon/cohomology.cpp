#include "hexagon/cohomology.hpp"

#include <algorithm>

#include "common/errors.hpp"

namespace hexcol {

namespace {

std::vector<Monomial> cochain_monomials(std::size_t dim, unsigned degree, CochainKind kind) {
  if (kind == CochainKind::polynomial) return monomials_of_degree(dim, degree);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Monomial m(2 * dim, 0);
      m[i] = 1;
      m[dim + j] = 1;
      out.push_back(std::move(m));
    }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::size_t cochain_vars(int level, const Field& f, CochainKind kind) {
  const std::size_t d = StandardColorings::get(level, f).dim();
  return kind == CochainKind::bilinear ? 2 * d : d;
}

Vector coefficients(const MPoly& p, const std::map<Monomial, std::size_t>& index, std::size_t size) {
  Vector v(size, 0);
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw DomainError("cochain has a term outside the monomial range");
    v[it->second] = c;
  }
  return v;
}

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& ms) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = i;
  return idx;
}

void check_cap(std::size_t count, std::size_t cap, const char* what) {
  if (count > cap)
    throw ResourceError(std::string("hexagon cohomology needs ") + std::to_string(count) + " " + what +
                        ", above the cap of " + std::to_string(cap));
}

// Matrix of delta from level-n cochains spanned by `source` (columns become rows
// here: one row per source monomial, in target coordinates).
Matrix coboundary_rows(int level, CochainKind kind, const Field& f, const std::vector<Monomial>& source,
                       const std::vector<Monomial>& target) {
  const auto idx = index_of(target);
  Matrix rows(f, source.size(), target.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const HexCochain c(level, kind, MPoly::monomial(f, source[i]));
    rows.set_row(i, coefficients(coboundary(c).poly(), idx, target.size()));
  }
  return rows;
}

}  // namespace

HexCohomologyReport hex_cohomology(int level, unsigned max_degree, const Field& f, CochainKind kind,
                                   std::size_t cap) {
  if (level < 3) throw InputError("hexagon cochains start at level 3");
  if (cap == 0) throw InputError("the monomial cap must be positive");
  HexCohomologyReport report{level, max_degree, kind, f, {}};
  std::vector<unsigned> degrees;
  if (kind == CochainKind::bilinear)
    degrees.push_back(2);
  else
    for (unsigned e = 0; e <= max_degree; ++e) degrees.push_back(e);

  const std::size_t here = StandardColorings::get(level, f).dim();
  const std::size_t above = StandardColorings::get(level + 1, f).dim();
  for (unsigned e : degrees) {
    auto count = [&](std::size_t dim) {
      // binomial(dim + e - 1, e) without building the list
      if (kind == CochainKind::bilinear) return dim * dim;
      long double c = 1;
      for (unsigned i = 1; i <= e; ++i) c = c * static_cast<long double>(dim + e - i) / i;
      return static_cast<std::size_t>(std::min<long double>(c + 0.5, 1e18));
    };
    check_cap(count(here), cap, "cochain columns");
    check_cap(count(above), cap, "coboundary rows");

    auto source = cochain_monomials(here, e, kind);
    const auto target = cochain_monomials(above, e, kind);
    // rows of `delta` are the images of the source monomials; Z is the left kernel
    const Matrix delta = coboundary_rows(level, kind, f, source, target);
    Subspace z = Subspace::kernel(delta.transpose());
    Subspace b(f, source.size());
    if (level > 3) {
      const std::size_t below = StandardColorings::get(level - 1, f).dim();
      check_cap(count(below), cap, "cochain columns one level down");
      const auto lower = cochain_monomials(below, e, kind);
      b = Subspace::span(coboundary_rows(level - 1, kind, f, lower, source));
    }
    const std::size_t zdim = z.dim(), bdim = b.dim();
    report.pieces.push_back(HexCohomologyPiece{e, std::move(source), zdim, bdim, QuotientSpace(std::move(z), std::move(b))});
  }
  return report;
}

std::size_t HexCohomologyReport::total_cocycles() const {
  std::size_t s = 0;
  for (const auto& p : pieces) s += p.cocycles;
  return s;
}

std::size_t HexCohomologyReport::total_coboundaries() const {
  std::size_t s = 0;
  for (const auto& p : pieces) s += p.coboundaries;
  return s;
}

std::size_t HexCohomologyReport::total_cohomology() const {
  std::size_t s = 0;
  for (const auto& p : pieces) s += p.cohomology();
  return s;
}

std::vector<HexCochain> HexCohomologyReport::representatives() const {
  std::vector<HexCochain> out;
  const std::size_t nv = cochain_vars(level, field, kind);
  for (const auto& piece : pieces)
    for (const auto& v : piece.classes.representatives()) {
      MPoly p(field, nv);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) p.add_term(piece.monomials[i], v[i]);
      out.emplace_back(level, kind, std::move(p));
    }
  return out;
}

Vector HexCohomologyReport::class_coordinates(const HexCochain& c) const {
  if (c.level() != level || c.kind() != kind) throw DomainError("cochain level or kind does not match the report");
  if (c.field() != field) throw DomainError("cochain over a different field");
  if (kind == CochainKind::polynomial && c.degree() > static_cast<int>(max_degree))
    throw DomainError("cochain degree exceeds the report's degree bound");
  Vector out;
  for (const auto& piece : pieces) {
    const MPoly part = kind == CochainKind::bilinear ? c.poly() : c.poly().homogeneous_part(piece.degree);
    const Vector v = coefficients(part, index_of(piece.monomials), piece.monomials.size());
    const Vector coords = piece.classes.coordinates(v);  // throws if not a cocycle
    out.insert(out.end(), coords.begin(), coords.end());
  }
  return out;
}

bool HexCohomologyReport::independent(const std::vector<HexCochain>& cocycles) const {
  Matrix m(field, 0, total_cohomology());
  for (const auto& c : cocycles) m.append_row(class_coordinates(c));
  return rank(m) == cocycles.size();
}

}  // namespace hexcol
