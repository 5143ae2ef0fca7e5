#include "parwb/mx_quotient.hpp"

#include <algorithm>
#include <numeric>

namespace parwb {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }
  // Keeps the smaller index as the representative, so representatives are
  // the least members of their classes.
  void merge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x < y) {
      parent_[y] = x;
    } else {
      parent_[x] = y;
    }
  }

 private:
  std::vector<int> parent_;
};

// Builds members/beta/iota from a filled class_of vector and renumbers
// classes by least pair index.
MXPartition finish_partition(const PartialAction& a,
                             std::vector<int> raw_class_of) {
  MXPartition p;
  p.monoid_size = a.monoid.size();
  p.carrier_size = a.carrier.size();
  const int pairs = p.monoid_size * p.carrier_size;

  // canonical ids in order of first occurrence = order of least member
  std::vector<int> renumber(pairs, -1);
  p.class_of.assign(pairs, -1);
  int next = 0;
  for (int i = 0; i < pairs; ++i) {
    const int raw = raw_class_of[i];
    if (renumber[raw] < 0) renumber[raw] = next++;
    p.class_of[i] = renumber[raw];
  }
  p.members.assign(next, {});
  for (int i = 0; i < pairs; ++i) p.members[p.class_of[i]].push_back(i);

  p.iota.resize(p.carrier_size);
  for (int x = 0; x < p.carrier_size; ++x) {
    p.iota[x] = p.class_of[p.pair_index(a.monoid.identity, x)];
  }

  // beta_n([m,x]) = [nm,x]; assert it is constant on every class
  p.beta.assign(p.monoid_size, std::vector<int>(next, -1));
  for (int n = 0; n < p.monoid_size; ++n) {
    for (int c = 0; c < next; ++c) {
      int value = -1;
      for (int member : p.members[c]) {
        const int m = p.pair_m(member);
        const int x = p.pair_x(member);
        const int target = p.class_of[p.pair_index(a.monoid.mul(n, m), x)];
        if (value < 0) {
          value = target;
        } else if (value != target) {
          throw InternalError(
              "beta_" + a.monoid.name(n) + " is not well defined on class " +
              std::to_string(c));
        }
      }
      p.beta[n][c] = value;
    }
  }
  return p;
}

}  // namespace

std::vector<HarpoonEdge> harpoon_edges(const PartialAction& a) {
  std::vector<HarpoonEdge> edges;
  const int nm = a.monoid.size();
  const int nx = a.carrier.size();
  for (int n = 0; n < nm; ++n) {
    for (int k = 0; k < nm; ++k) {
      const int m = a.monoid.mul(n, k);
      for (int x = 0; x < nx; ++x) {
        if (!a.defined(k, x)) continue;
        edges.push_back(HarpoonEdge{m, x, n, a.apply(k, x), k});
      }
    }
  }
  return edges;
}

MXPartition classes_generic(const PartialAction& a) {
  const int pairs = a.monoid.size() * a.carrier.size();
  const int nx = a.carrier.size();
  UnionFind uf(pairs);
  for (const auto& e : harpoon_edges(a)) {
    uf.merge(e.from_m * nx + e.from_x, e.to_m * nx + e.to_x);
  }
  std::vector<int> raw(pairs);
  for (int i = 0; i < pairs; ++i) raw[i] = uf.find(i);
  return finish_partition(a, std::move(raw));
}

MXPartition classes_g0_closed_form(const PartialAction& a) {
  auto view = as_g0(a.monoid);
  if (!view) {
    throw InputError("classes_g0_closed_form: monoid is not of the form G^0");
  }
  const int zero = view->zero;
  const int nx = a.carrier.size();
  const int pairs = a.monoid.size() * nx;
  const Subset dom0 = a.domain(zero);
  const Subset im0 = a.image(zero);

  auto pair_index = [&](int m, int x) { return m * nx + x; };

  std::vector<int> raw(pairs, -1);
  auto assign_class = [&](const std::vector<int>& klass) {
    const int rep = *std::min_element(klass.begin(), klass.end());
    for (int member : klass) {
      if (raw[member] >= 0 && raw[member] != rep) {
        throw InternalError(
            "closed-form classes do not partition the pair space");
      }
      raw[member] = rep;
    }
  };

  for (int x = 0; x < nx; ++x) {
    if (im0.contains(x)) {
      // (G x {x}) u ({0} x alpha_0^{-1}(x))
      std::vector<int> klass;
      for (int gm : view->group_to_monoid) klass.push_back(pair_index(gm, x));
      for (int u = 0; u < nx; ++u) {
        if (a.defined(zero, u) && a.apply(zero, u) == x) {
          klass.push_back(pair_index(zero, u));
        }
      }
      assign_class(klass);
    } else {
      // one class per orbit representative; membership from the g-orbit of x
      for (int gi = 0; gi < view->group.size(); ++gi) {
        const int gm = view->group_to_monoid[gi];
        if (raw[pair_index(gm, x)] >= 0) continue;
        std::vector<int> klass;
        for (int hi = 0; hi < view->group.size(); ++hi) {
          const int k = view->group.mul(view->group.inv(hi), gi);
          const int km = view->group_to_monoid[k];
          if (a.defined(km, x)) {
            klass.push_back(
                pair_index(view->group_to_monoid[hi], a.apply(km, x)));
          }
        }
        assign_class(klass);
      }
    }
    if (!dom0.contains(x)) {
      if (raw[pair_index(zero, x)] < 0) {
        std::vector<int> klass;
        for (int gi = 0; gi < view->group.size(); ++gi) {
          const int gm = view->group_to_monoid[gi];
          if (a.defined(gm, x)) {
            klass.push_back(pair_index(zero, a.apply(gm, x)));
          }
        }
        assign_class(klass);
      }
    }
  }

  for (int i = 0; i < pairs; ++i) {
    if (raw[i] < 0) {
      throw InternalError("closed-form classes left pair " + std::to_string(i) +
                          " unassigned");
    }
  }
  return finish_partition(a, std::move(raw));
}

std::string pair_to_string(const PartialAction& a, int pair_index) {
  const int nx = a.carrier.size();
  return "(" + a.monoid.name(pair_index / nx) + "," +
         a.carrier.name(pair_index % nx) + ")";
}

std::string class_to_string(const PartialAction& a, const MXPartition& p,
                            int class_id) {
  std::string out = "{";
  bool first = true;
  for (int member : p.members[class_id]) {
    if (!first) out += " ";
    out += pair_to_string(a, member);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace parwb
