#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyforge/face_lattice.hpp"
#include "polyforge/validation.hpp"
#include "polyforge/vertex_set_complex.hpp"

namespace polyforge {

/// Boolean lattice on d+1 vertices: the d-simplex.
inline FaceLattice simplex(int d) {
  if (d < 0 || d > 12) throw Error(ErrorKind::BadParameter, "simplex dimension outside 0..12");
  const std::uint32_t v = static_cast<std::uint32_t>(d) + 1;
  VertexSetComplex k;
  k.vertex_count = v;
  k.faces_by_rank.assign(static_cast<std::size_t>(d) + 2, {});
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    VertexSetComplex::FaceSet fs;
    for (std::uint32_t i = 0; i < v; ++i)
      if (mask & (1u << i)) fs.push_back(i);
    k.faces_of_rank(static_cast<int>(fs.size()) - 1).push_back(std::move(fs));
  }
  k.normalize();
  return to_lattice(k);
}

/// The p-gon as a rank-2 lattice.
inline FaceLattice polygon(int p) {
  if (p < 3) throw Error(ErrorKind::BadParameter, "polygon needs p >= 3");
  VertexSetComplex k = make_vsc_skeleton(static_cast<std::uint32_t>(p), 2);
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(p); ++i) {
    std::uint32_t j = (i + 1) % static_cast<std::uint32_t>(p);
    k.faces_of_rank(1).push_back({std::min(i, j), std::max(i, j)});
  }
  k.normalize();
  return to_lattice(k);
}

/// The d-cube: faces fix a subset of coordinates, f_j = 2^{d-j} C(d,j).
inline FaceLattice hypercube(int d) {
  if (d < 0 || d > 10) throw Error(ErrorKind::BadParameter, "hypercube dimension outside 0..10");
  VertexSetComplex k;
  k.vertex_count = 1u << d;
  k.faces_by_rank.assign(static_cast<std::size_t>(d) + 2, {});
  k.faces_of_rank(-1).push_back({});
  // a face = (free-coordinate mask, fixed bits); vertices are its completions
  for (std::uint32_t free = 0; free < (1u << d); ++free) {
    const int r = std::popcount(free);
    std::uint32_t fixed_positions = ~free & ((1u << d) - 1);
    // iterate all assignments of the fixed positions
    std::uint32_t bits = 0;
    do {
      VertexSetComplex::FaceSet fs;
      std::uint32_t sub = 0;
      do {
        fs.push_back(sub | bits);
        sub = (sub - free) & free;  // next subset of the free mask
      } while (sub != 0);
      std::sort(fs.begin(), fs.end());
      k.faces_of_rank(r).push_back(std::move(fs));
      bits = (bits - fixed_positions) & fixed_positions;
    } while (bits != 0);
  }
  k.normalize();
  return to_lattice(k);
}

/// Torus map families from the paper: {4,4}_{(s,0)} and {3,6}_{(s,0)}.
struct TorusMapSpec {
  enum class Family { Square44, Triangle36 };
  Family family = Family::Square44;
  int s = 3;
};

/// Quotient maps on the s x s torus. Faces are indexed explicitly (vertex
/// sets repeat for small s, e.g. parallel edges at s = 2, so the lattice is
/// built from covers, not subsets). The output is validated; a quotient
/// violating the axioms is reported, not returned.
inline FaceLattice torus_map(const TorusMapSpec& spec) {
  const int s = spec.s;
  if (s < 2) throw Error(ErrorKind::BadParameter, "torus map needs s >= 2");
  const std::int64_t s2 = static_cast<std::int64_t>(s) * s;
  auto vid = [&](int i, int j) {
    return static_cast<std::int64_t>(((i % s + s) % s)) * s + ((j % s + s) % s);
  };

  LatticeInput in;
  in.rank = 3;
  const std::int64_t kBottom = -1;
  std::int64_t next = 0;
  in.faces.emplace_back(kBottom, -1);
  in.vertex_labels.emplace_back(kBottom, std::vector<VertexLabel>{});

  // vertices 0..s^2-1, labelled i*s+j
  for (std::int64_t v = 0; v < s2; ++v) {
    in.faces.emplace_back(next, 0);
    in.vertex_labels.emplace_back(next, std::vector<VertexLabel>{v});
    in.covers.emplace_back(kBottom, next);
    ++next;
  }
  auto add_edge = [&](int i1, int j1, int i2, int j2) {
    std::int64_t id = next++;
    in.faces.emplace_back(id, 1);
    in.vertex_labels.emplace_back(id, std::vector<VertexLabel>{vid(i1, j1), vid(i2, j2)});
    in.covers.emplace_back(vid(i1, j1), id);
    in.covers.emplace_back(vid(i2, j2), id);
    return id;
  };

  if (spec.family == TorusMapSpec::Family::Square44) {
    std::vector<std::int64_t> eh(static_cast<std::size_t>(s2)), ev(static_cast<std::size_t>(s2));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) eh[static_cast<std::size_t>(i * s + j)] = add_edge(i, j, i + 1, j);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) ev[static_cast<std::size_t>(i * s + j)] = add_edge(i, j, i, j + 1);
    auto EH = [&](int i, int j) { return eh[static_cast<std::size_t>(((i % s + s) % s) * s + ((j % s + s) % s))]; };
    auto EV = [&](int i, int j) { return ev[static_cast<std::size_t>(((i % s + s) % s) * s + ((j % s + s) % s))]; };
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        std::int64_t q = next++;
        in.faces.emplace_back(q, 2);
        in.vertex_labels.emplace_back(
            q, std::vector<VertexLabel>{vid(i, j), vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)});
        in.covers.emplace_back(EH(i, j), q);
        in.covers.emplace_back(EH(i, j + 1), q);
        in.covers.emplace_back(EV(i, j), q);
        in.covers.emplace_back(EV(i + 1, j), q);
      }
    }
  } else {
    std::vector<std::int64_t> eh(static_cast<std::size_t>(s2)), ev(static_cast<std::size_t>(s2)),
        ed(static_cast<std::size_t>(s2));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) eh[static_cast<std::size_t>(i * s + j)] = add_edge(i, j, i + 1, j);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) ev[static_cast<std::size_t>(i * s + j)] = add_edge(i, j, i, j + 1);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) ed[static_cast<std::size_t>(i * s + j)] = add_edge(i + 1, j, i, j + 1);
    auto at = [&](std::vector<std::int64_t>& list, int i, int j) {
      return list[static_cast<std::size_t>(((i % s + s) % s) * s + ((j % s + s) % s))];
    };
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        // upward triangle of cell (i,j)
        std::int64_t u = next++;
        in.faces.emplace_back(u, 2);
        in.vertex_labels.emplace_back(
            u, std::vector<VertexLabel>{vid(i, j), vid(i + 1, j), vid(i, j + 1)});
        in.covers.emplace_back(at(eh, i, j), u);
        in.covers.emplace_back(at(ev, i, j), u);
        in.covers.emplace_back(at(ed, i, j), u);
        // downward triangle of cell (i,j)
        std::int64_t dn = next++;
        in.faces.emplace_back(dn, 2);
        in.vertex_labels.emplace_back(
            dn, std::vector<VertexLabel>{vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)});
        in.covers.emplace_back(at(ed, i, j), dn);
        in.covers.emplace_back(at(ev, i + 1, j), dn);
        in.covers.emplace_back(at(eh, i, j + 1), dn);
      }
    }
  }

  std::int64_t top = next++;
  in.faces.emplace_back(top, 3);
  {
    std::vector<VertexLabel> all(static_cast<std::size_t>(s2));
    for (std::int64_t v = 0; v < s2; ++v) all[static_cast<std::size_t>(v)] = v;
    in.vertex_labels.emplace_back(top, std::move(all));
  }
  for (const auto& [ext, r] : in.faces)
    if (r == 2) in.covers.emplace_back(ext, top);

  FaceLattice L = build_lattice(in);
  ValidationReport rep = validate_polytope(L);
  if (!rep.ok())
    throw Error(ErrorKind::ValidationFailed,
                "torus quotient violates the polytope axioms: " +
                    (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
  return L;
}

inline FaceLattice torus_44(int s) {
  return torus_map({TorusMapSpec::Family::Square44, s});
}
inline FaceLattice torus_36(int s) {
  return torus_map({TorusMapSpec::Family::Triangle36, s});
}

}  // namespace polyforge
