#ifndef LCWB_GRADED_HPP
#define LCWB_GRADED_HPP

#include <vector>

#include "lcwb/linalg.hpp"
#include "lcwb/modobj.hpp"

namespace lcwb {

// Rectangular box of multidegrees, iterated in lexicographic order.
struct DegreeBox {
  Multideg lo, hi;

  static DegreeBox cube(int nvars, int lo, int hi);
  bool contains(const Multideg& a) const;
  DegreeBox expanded(int by) const;
  std::vector<Multideg> degrees() const;
};

// Coefficient view of a multigraded (optionally monomially localized)
// presentation: every relation column is a term column, so its degree plus
// a coefficient per row determines it completely.
struct GradedPresentation {
  RingPtr ring;
  std::vector<Multideg> gen_degs;
  struct RelCol {
    Multideg deg;
    std::vector<std::pair<int, uint32_t>> entries;  // (row, coefficient)
  };
  std::vector<RelCol> rels;
  std::vector<bool> inverted;  // per variable

  // throws NonHomogeneousInput unless M is graded with term relations
  static GradedPresentation from(const ModuleObject& M);
  static GradedPresentation from(const ModuleObject& M, std::vector<bool> inverted);

  bool admissible(const Multideg& e) const {
    for (size_t v = 0; v < inverted.size(); ++v)
      if (!inverted[v] && e[v] < 0) return false;
    return true;
  }
};

// The degree-a component: active generators and the echelonized span of the
// active relation columns. The quotient basis is indexed by non-pivot rows.
struct GradedPiece {
  std::vector<int> active;          // generator indices
  ColSpace<PrimeField> relspan;     // inside F^{|active|}
  std::vector<int> quotient_rows;   // positions (into active) of the basis

  int dim() const { return static_cast<int>(quotient_rows.size()); }

  // full vector (active coords) -> quotient coordinates
  std::vector<uint32_t> project(const PrimeField& F, std::vector<uint32_t> v) const;
  // quotient coordinates -> representative in active coords
  std::vector<uint32_t> lift(const PrimeField& F, const std::vector<uint32_t>& q) const;
};

GradedPiece graded_piece(const GradedPresentation& P, const Multideg& a);

// Map on quotient bases induced by a term matrix `mat` (columns over R, all
// entries multihomogeneous) from the degree-a piece of src to the degree
// (a + matdeg) piece of tgt. src and tgt may be different modules (e.g. a
// module map) or the same module with a larger inverted set (localization).
Mat<PrimeField> term_matrix_piece_map(const GradedPresentation& tgt, const GradedPiece& pt,
                                      const GradedPresentation& src, const GradedPiece& ps,
                                      const PolyMat& mat, const Multideg& matdeg,
                                      const Multideg& a);

// Multiplication by c * x^e as a piece map (same module; inverted(src) must
// be contained in inverted(tgt); negative exponents only on inverted vars).
Mat<PrimeField> monomial_piece_map(const GradedPresentation& tgt, const GradedPiece& pt,
                                   const GradedPresentation& src, const GradedPiece& ps,
                                   const Multideg& e, uint32_t coeff, const Multideg& a);

}  // namespace lcwb

#endif
