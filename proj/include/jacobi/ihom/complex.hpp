#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace jacobi::ihom {

// Sorted list of vertex ids.
using Simplex = std::vector<int>;

struct ComplexInput {
  // Optional; defaults to "v<i>".
  std::vector<std::string> vertex_names;
  // Any generating simplices; all faces are added.
  std::vector<Simplex> simplices;
  // level(sigma) = least i with sigma in V_i. Unlisted simplices sit at
  // level m. The levels must already describe closed subcomplexes.
  std::map<Simplex, int> levels;
  // Generators of the ideal boundary; closed under faces automatically.
  std::vector<Simplex> ideal_boundary;
};

struct VertexLink {
  int vertex = -1;
  int components = 0;
  // For m = 2: the link is a single cycle, or a single arc at an ideal
  // vertex; for m = 1: two points, or one at an ideal vertex.
  bool manifold_like = false;
  bool ideal = false;
};

struct Diagnostics {
  // Values i for which the stratum V_i \ V_{i-1} is nonempty.
  std::vector<int> stratum_dims;
  // Number of (m-1)-simplices outside the ideal boundary, keyed by how many
  // m-simplices contain them.
  std::map<int, int> face_pairing;
  // Ideal (m-1)-simplices keyed the same way.
  std::map<int, int> ideal_face_pairing;
  std::vector<VertexLink> links;
  // Vertices whose link is not manifold_like.
  std::vector<int> flagged_vertices;
  std::vector<std::string> warnings;
};

class FilteredComplex {
 public:
  int dim() const { return dim_; }
  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }

  // Simplices of dimension d in lexicographic order.
  const std::vector<Simplex>& simplices(int d) const;
  std::size_t count(int d) const { return simplices(d).size(); }
  // -1 when absent.
  long index_of(const Simplex& s) const;

  int level(int d, std::size_t i) const { return levels_[static_cast<std::size_t>(d)][i]; }
  bool ideal(int d, std::size_t i) const { return ideal_[static_cast<std::size_t>(d)][i]; }
  int level(const Simplex& s) const;
  bool ideal(const Simplex& s) const;
  // Largest dimension of a face of the simplex lying in V_j, or -1 when
  // there is none (the empty set).
  int face_dim_in(int d, std::size_t i, int j) const {
    return face_dim_[static_cast<std::size_t>(d)][i][static_cast<std::size_t>(j)];
  }

  // Indices (into simplices(d - 1)) of the facets of simplex i, in the order
  // of the omitted vertex; the boundary sign of facet k is (-1)^k.
  std::vector<std::size_t> facets(int d, std::size_t i) const;

  bool has_singular_strata() const;
  bool has_ideal_boundary() const;

  const Diagnostics& diagnostics() const { return diagnostics_; }

 private:
  friend FilteredComplex build_complex(const ComplexInput& input);

  int dim_ = -1;
  std::vector<std::string> names_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<bool>> ideal_;
  std::vector<std::vector<std::vector<int>>> face_dim_;
  Diagnostics diagnostics_;
};

// Face completion and validation. Throws InvalidComplex (malformed input),
// FiltrationNotClosed, DimensionViolation and DanglingSimplex.
FilteredComplex build_complex(const ComplexInput& input);

// Inverse of build_complex up to face completion: every simplex listed with
// its level and ideal flag.
ComplexInput to_input(const FilteredComplex& k);

// Same complex with every simplex at level m.
FilteredComplex without_filtration(const FilteredComplex& k);
// Same complex with an empty ideal boundary.
FilteredComplex without_ideal_boundary(const FilteredComplex& k);

FilteredComplex barycentric_subdivide(const FilteredComplex& k);

}  // namespace jacobi::ihom
