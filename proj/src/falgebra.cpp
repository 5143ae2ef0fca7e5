#include "parwb/falgebra.hpp"

#include <algorithm>

namespace parwb {

namespace {

int mod_inverse(int a, int p) {
  // p is prime and a != 0 mod p
  int result = 1;
  int base = ((a % p) + p) % p;
  int exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

void check_prime(int p) {
  if (p < 2) throw InputError("p must be prime, got " + std::to_string(p));
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      throw InputError("p = " + std::to_string(p) + " is not prime");
    }
  }
}

}  // namespace

FpMat rref(FpMat m, int p) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return m;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const int inv = mod_inverse(m[rank][col], p);
    for (int c = 0; c < cols; ++c) m[rank][c] = m[rank][c] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const int factor = m[r][col];
      for (int c = 0; c < cols; ++c) {
        m[r][c] = ((m[r][c] - factor * m[rank][c]) % p + p) % p;
      }
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

FpVec reduce_against(const FpMat& rref_basis, FpVec v, int p) {
  for (const auto& row : rref_basis) {
    int pivot = -1;
    for (int c = 0; c < static_cast<int>(row.size()); ++c) {
      if (row[c] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0 || v[pivot] == 0) continue;
    const int factor = v[pivot];
    for (int c = 0; c < static_cast<int>(v.size()); ++c) {
      v[c] = ((v[c] - factor * row[c]) % p + p) % p;
    }
  }
  return v;
}

bool in_span(const FpMat& rref_basis, const FpVec& v, int p) {
  const FpVec residue = reduce_against(rref_basis, v, p);
  return std::all_of(residue.begin(), residue.end(),
                     [](int c) { return c == 0; });
}

bool same_span(const FpMat& rref_a, const FpMat& rref_b) {
  return rref_a == rref_b;  // rref bases are canonical
}

FpMat left_nullspace(const FpMat& rows, int p, int ambient_dim) {
  const int k = static_cast<int>(rows.size());
  // Solve sum_i c_i rows[i] = 0 by reducing the transpose-augmented system:
  // run rref on [rows | I_k] and keep the identity parts of zero rows.
  FpMat augmented(k, FpVec(ambient_dim + k, 0));
  for (int i = 0; i < k; ++i) {
    std::copy(rows[i].begin(), rows[i].end(), augmented[i].begin());
    augmented[i][ambient_dim + i] = 1;
  }
  // rref over the first ambient_dim columns only
  int rank = 0;
  for (int col = 0; col < ambient_dim && rank < k; ++col) {
    int pivot = -1;
    for (int r = rank; r < k; ++r) {
      if (augmented[r][col] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(augmented[rank], augmented[pivot]);
    const int inv = mod_inverse(augmented[rank][col], p);
    for (auto& c : augmented[rank]) c = c * inv % p;
    for (int r = 0; r < k; ++r) {
      if (r == rank || augmented[r][col] == 0) continue;
      const int factor = augmented[r][col];
      for (int c = 0; c < ambient_dim + k; ++c) {
        augmented[r][c] =
            ((augmented[r][c] - factor * augmented[rank][c]) % p + p) % p;
      }
    }
    ++rank;
  }
  FpMat coeffs;
  for (int r = rank; r < k; ++r) {
    coeffs.emplace_back(augmented[r].begin() + ambient_dim, augmented[r].end());
  }
  return rref(std::move(coeffs), p);
}

FpVec FiniteAlgebra::multiply(const FpVec& a, const FpVec& b) const {
  FpVec out(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const int coeff = a[i] * b[j] % p;
      const FpVec& sc = structure[i][j];
      for (int k = 0; k < dim; ++k) {
        out[k] = (out[k] + coeff * sc[k]) % p;
      }
    }
  }
  return out;
}

FpVec FiniteAlgebra::basis_vector(int i) const {
  FpVec v(dim, 0);
  v[i] = 1;
  return v;
}

std::string FiniteAlgebra::vector_name(const FpVec& v) const {
  std::string out;
  for (int i = 0; i < dim; ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (v[i] != 1) out += std::to_string(v[i]) + "*";
    out += basis_names[i];
  }
  return out.empty() ? "0" : out;
}

std::optional<std::array<int, 3>> validate_algebra(const FiniteAlgebra& a) {
  check_prime(a.p);
  if (a.dim < 1) throw InputError("algebra dimension must be >= 1");
  if (static_cast<int>(a.structure.size()) != a.dim) {
    throw InputError("structure constants must have dim rows");
  }
  for (int i = 0; i < a.dim; ++i) {
    if (static_cast<int>(a.structure[i].size()) != a.dim) {
      throw InputError("structure row " + std::to_string(i) + " has wrong size");
    }
    for (int j = 0; j < a.dim; ++j) {
      if (static_cast<int>(a.structure[i][j].size()) != a.dim) {
        throw InputError("structure entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") has wrong size");
      }
      for (int c : a.structure[i][j]) {
        if (c < 0 || c >= a.p) {
          throw InputError("structure constant out of range at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }
  // bilinearity makes basis triples sufficient
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      const FpVec ij = a.structure[i][j];
      for (int k = 0; k < a.dim; ++k) {
        const FpVec lhs = a.multiply(ij, a.basis_vector(k));
        const FpVec rhs = a.multiply(a.basis_vector(i), a.structure[j][k]);
        if (lhs != rhs) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

FiniteAlgebra make_algebra(int p, int dim,
                           std::vector<std::vector<FpVec>> structure,
                           std::vector<std::string> basis_names) {
  FiniteAlgebra a;
  a.p = p;
  a.dim = dim;
  a.structure = std::move(structure);
  if (basis_names.empty()) basis_names = default_names(dim, "e");
  if (static_cast<int>(basis_names.size()) != dim) {
    throw InputError("basis_names has wrong length");
  }
  a.basis_names = std::move(basis_names);
  if (auto v = validate_algebra(a)) {
    throw InputError("algebra is not associative at basis triple (" +
                     std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) +
                     "," + std::to_string((*v)[2]) + ")");
  }
  return a;
}

bool LinearPA01::in_dom0(const FpVec& v) const {
  return in_span(dom0_rref, v, algebra.p);
}

std::optional<FpVec> LinearPA01::apply0(const FpVec& v) const {
  const int p = algebra.p;
  FpVec residue = v;
  FpVec image(algebra.dim, 0);
  for (size_t r = 0; r < dom0_rref.size(); ++r) {
    int pivot = -1;
    for (int c = 0; c < algebra.dim; ++c) {
      if (dom0_rref[r][c] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0 || residue[pivot] == 0) continue;
    const int coeff = residue[pivot];
    for (int c = 0; c < algebra.dim; ++c) {
      residue[c] = ((residue[c] - coeff * dom0_rref[r][c]) % p + p) % p;
      image[c] = (image[c] + coeff * alpha_on_rref[r][c]) % p;
    }
  }
  if (std::any_of(residue.begin(), residue.end(), [](int c) { return c != 0; }))
    return std::nullopt;
  return image;
}

FpMat LinearPA01::im0_rref() const { return rref(alpha_on_rref, algebra.p); }

FpMat LinearPA01::ker0_rref() const {
  // coefficient vectors c with sum c_i alpha(rref_i) = 0, mapped back through
  // the rref basis of the domain
  const FpMat coeffs = left_nullspace(alpha_on_rref, algebra.p, algebra.dim);
  FpMat kernel;
  for (const auto& c : coeffs) {
    FpVec v(algebra.dim, 0);
    for (size_t r = 0; r < dom0_rref.size(); ++r) {
      for (int i = 0; i < algebra.dim; ++i) {
        v[i] = (v[i] + c[r] * dom0_rref[r][i]) % algebra.p;
      }
    }
    kernel.push_back(std::move(v));
  }
  return rref(std::move(kernel), algebra.p);
}

LinearPA01 make_linear_pa01(FiniteAlgebra algebra, FpMat dom0_basis,
                            FpMat alpha0_rows) {
  if (dom0_basis.size() != alpha0_rows.size()) {
    throw InputError("alpha0_matrix must have one row per dom0_basis row");
  }
  for (const auto& rows : {dom0_basis, alpha0_rows}) {
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != algebra.dim) {
        throw InputError("basis/matrix row has wrong length");
      }
      for (int c : row) {
        if (c < 0 || c >= algebra.p) {
          throw InputError("coordinate out of range mod p");
        }
      }
    }
  }

  LinearPA01 pa;
  pa.algebra = std::move(algebra);
  pa.dom0_basis = std::move(dom0_basis);
  pa.alpha0_rows = std::move(alpha0_rows);
  const int p = pa.algebra.p;
  const int dim = pa.algebra.dim;

  // Reduce the domain basis, tracking how each rref row combines the input
  // rows so that alpha can be transported onto the rref basis.
  const int k = static_cast<int>(pa.dom0_basis.size());
  // columns: [vector | one-hot of the input row]
  FpMat augmented(k, FpVec(dim + k, 0));
  for (int i = 0; i < k; ++i) {
    std::copy(pa.dom0_basis[i].begin(), pa.dom0_basis[i].end(),
              augmented[i].begin());
    augmented[i][dim + i] = 1;
  }
  int rank = 0;
  for (int col = 0; col < dim && rank < k; ++col) {
    int pivot = -1;
    for (int r = rank; r < k; ++r) {
      if (augmented[r][col] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(augmented[rank], augmented[pivot]);
    const int inv = mod_inverse(augmented[rank][col], p);
    for (auto& c : augmented[rank]) c = c * inv % p;
    for (int r = 0; r < k; ++r) {
      if (r == rank || augmented[r][col] == 0) continue;
      const int factor = augmented[r][col];
      for (int c = 0; c < dim + k; ++c) {
        augmented[r][c] =
            ((augmented[r][c] - factor * augmented[rank][c]) % p + p) % p;
      }
    }
    ++rank;
  }
  for (int r = 0; r < rank; ++r) {
    pa.dom0_rref.emplace_back(augmented[r].begin(), augmented[r].begin() + dim);
    FpVec image(dim, 0);
    for (int i = 0; i < k; ++i) {
      const int coeff = augmented[r][dim + i];
      if (coeff == 0) continue;
      for (int c = 0; c < dim; ++c) {
        image[c] = (image[c] + coeff * pa.alpha0_rows[i][c]) % p;
      }
    }
    pa.alpha_on_rref.push_back(std::move(image));
  }
  // Dependent input rows must map consistently, i.e. alpha is a linear map.
  for (int i = 0; i < k; ++i) {
    const auto image = pa.apply0(pa.dom0_basis[i]);
    if (!image || *image != pa.alpha0_rows[i]) {
      throw InputError("alpha0_matrix is not a well-defined linear map on "
                       "span(dom0_basis): row " + std::to_string(i));
    }
  }

  if (!is_subalgebra(pa.algebra, pa.dom0_rref)) {
    throw InputError("dom0 is not a subalgebra of the algebra");
  }
  // alpha_0 must be an algebra homomorphism on dom0.
  for (size_t i = 0; i < pa.dom0_rref.size(); ++i) {
    for (size_t j = 0; j < pa.dom0_rref.size(); ++j) {
      const FpVec uv = pa.algebra.multiply(pa.dom0_rref[i], pa.dom0_rref[j]);
      const auto lhs = pa.apply0(uv);
      const FpVec rhs =
          pa.algebra.multiply(pa.alpha_on_rref[i], pa.alpha_on_rref[j]);
      if (!lhs || *lhs != rhs) {
        throw InputError("alpha_0 is not an algebra homomorphism on dom0");
      }
    }
  }
  // im alpha_0 inside dom0, and alpha_0 idempotent.
  for (const auto& image : pa.alpha_on_rref) {
    if (!pa.in_dom0(image)) {
      throw InputError("im alpha_0 is not contained in dom alpha_0");
    }
    const auto twice = pa.apply0(image);
    if (!twice || *twice != image) {
      throw InputError("alpha_0 is not idempotent");
    }
  }
  return pa;
}

bool is_subalgebra(const FiniteAlgebra& a, const FpMat& v_rref) {
  for (const auto& u : v_rref) {
    for (const auto& v : v_rref) {
      if (!in_span(v_rref, a.multiply(u, v), a.p)) return false;
    }
  }
  return true;
}

SubspaceIdealCheck is_ideal_subspace(const FiniteAlgebra& a,
                                     const FpMat& v_rref) {
  SubspaceIdealCheck check;
  for (int i = 0; i < a.dim; ++i) {
    const FpVec e = a.basis_vector(i);
    for (const auto& v : v_rref) {
      const FpVec left = a.multiply(e, v);
      if (!in_span(v_rref, left, a.p)) {
        check.ideal = false;
        check.witness = SubspaceIdealWitness{i, v, true, left};
        return check;
      }
      const FpVec right = a.multiply(v, e);
      if (!in_span(v_rref, right, a.p)) {
        check.ideal = false;
        check.witness = SubspaceIdealWitness{i, v, false, right};
        return check;
      }
    }
  }
  check.ideal = true;
  return check;
}

AlgebraDecision decide_globalizable_algebra01(const LinearPA01& pa) {
  AlgebraDecision d;
  d.kernel = pa.ker0_rref();
  const auto dom_check = is_ideal_subspace(pa.algebra, pa.dom0_rref);
  const auto im_check = is_ideal_subspace(pa.algebra, pa.im0_rref());
  if (!dom_check.ideal || !im_check.ideal) {
    d.reason = std::string(!dom_check.ideal ? "dom" : "im") +
               " alpha_0 is not an ideal of the algebra";
    return d;
  }
  const auto kernel_check = is_ideal_subspace(pa.algebra, d.kernel);
  if (kernel_check.ideal) {
    d.verdict = Verdict::kPass;
    return d;
  }
  d.verdict = Verdict::kFail;
  d.witness = kernel_check.witness;
  const auto& w = *d.witness;
  const std::string e_name = pa.algebra.basis_names[w.basis_index];
  const std::string v_name = pa.algebra.vector_name(w.subspace_vector);
  const std::string prod_name = pa.algebra.vector_name(w.product);
  d.witness_text = (w.left ? e_name + "*" + v_name : v_name + "*" + e_name) +
                   " = " + prod_name + ", which is outside ker alpha_0";
  return d;
}

FiniteSemigroup multiplicative_semigroup(const FiniteAlgebra& a, int cap) {
  long long size = 1;
  for (int i = 0; i < a.dim; ++i) {
    size *= a.p;
    if (size > cap) {
      throw SizeCapError("multiplicative_semigroup: p^dim exceeds cap " +
                         std::to_string(cap));
    }
  }
  const int n = static_cast<int>(size);
  auto decode = [&](int index) {
    FpVec v(a.dim);
    for (int i = 0; i < a.dim; ++i) {
      v[i] = index % a.p;
      index /= a.p;
    }
    return v;
  };
  auto encode = [&](const FpVec& v) {
    int index = 0;
    for (int i = a.dim - 1; i >= 0; --i) index = index * a.p + v[i];
    return index;
  };
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    const FpVec vi = decode(i);
    names[i] = a.vector_name(vi);
    for (int j = 0; j < n; ++j) {
      table[i][j] = encode(a.multiply(vi, decode(j)));
    }
  }
  return FiniteSemigroup(std::move(names), table);
}

PartialAction semigroup_view(const LinearPA01& pa, int cap) {
  PartialAction out;
  out.monoid = monoid_01();
  out.carrier = multiplicative_semigroup(pa.algebra, cap);
  const int n = out.carrier.size();
  const int p = pa.algebra.p;
  auto decode = [&](int index) {
    FpVec v(pa.algebra.dim);
    for (int i = 0; i < pa.algebra.dim; ++i) {
      v[i] = index % p;
      index /= p;
    }
    return v;
  };
  auto encode = [&](const FpVec& v) {
    int index = 0;
    for (int i = pa.algebra.dim - 1; i >= 0; --i) index = index * p + v[i];
    return index;
  };
  out.maps.assign(2, std::vector<int>(n, PartialAction::kUndefined));
  for (int i = 0; i < n; ++i) {
    out.maps[0][i] = i;  // identity of the monoid
    if (const auto image = pa.apply0(decode(i))) {
      out.maps[1][i] = encode(*image);
    }
  }
  return out;
}

}  // namespace parwb
