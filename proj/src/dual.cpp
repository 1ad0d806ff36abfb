#include "wcoh/dual.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>

namespace wcoh {

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets) {
  SimplicialComplex k;
  for (Face f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvalidInput("simplicial complex: repeated vertex in a facet");
    if (f.empty()) continue;
    if (f.size() > 24) throw InvalidInput("simplicial complex: facet too large");
    const std::size_t n = f.size();
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ul << i)) sub.push_back(f[i]);
      k.faces_.insert(std::move(sub));
    }
  }
  return k;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const auto& f : faces_)
    if (f.size() == 1) out.push_back(f[0]);
  return out;
}

std::size_t SimplicialComplex::vertex_count() const { return vertices().size(); }

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int p) const {
  if (p == -1) return {Face{}};
  std::vector<Face> out;
  for (const auto& f : faces_)
    if (static_cast<int>(f.size()) == p + 1) out.push_back(f);
  return out;
}

SimplicialComplex nerve(const SncDatum& s) {
  require_valid(s);
  std::vector<Face> faces;
  for (const auto& [subset, data] : s.strata)
    if (!subset.empty()) faces.push_back(subset);
  return SimplicialComplex::from_facets(faces);
}

namespace {

// Incidence matrix with rows indexed by `upper` (p+1 faces) and columns by
// `lower` (p faces): entry (-1)^j where lower = upper minus its j-th vertex.
IntMatrix incidence(const std::vector<Face>& upper, const std::vector<Face>& lower) {
  std::map<Face, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
  IntMatrix m(upper.size(), lower.size());
  for (std::size_t r = 0; r < upper.size(); ++r)
    for (std::size_t j = 0; j < upper[r].size(); ++j) {
      Face f = upper[r];
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
      m(r, index.at(f)) = (j % 2 == 0) ? 1 : -1;
    }
  return m;
}

}  // namespace

CochainComplex reduced_cochain_complex(const SimplicialComplex& k) {
  const int top = k.dimension();
  std::vector<std::vector<Face>> faces;
  std::vector<FpAbPresentation> groups;
  for (int p = -1; p <= top; ++p) {
    faces.push_back(k.faces_of_dimension(p));
    groups.push_back(FpAbPresentation::free(faces.back().size()));
  }
  std::vector<FpAbHom> diffs;
  for (std::size_t i = 0; i + 1 < faces.size(); ++i)
    diffs.emplace_back(groups[i], groups[i + 1], incidence(faces[i + 1], faces[i]));
  return {-1, std::move(groups), std::move(diffs)};
}

std::map<int, FgAbGroup> reduced_cohomology(const SimplicialComplex& k) {
  return cohomology(reduced_cochain_complex(k));
}

std::map<int, FgAbGroup> simplicial_homology(const SimplicialComplex& k) {
  const int top = k.dimension();
  std::map<int, FgAbGroup> out;
  auto boundary = [&](int p) {
    // d_p : C_p -> C_{p-1}; zero for p = 0 and beyond the top dimension.
    const auto src = (p >= 0 && p <= top) ? k.faces_of_dimension(p) : std::vector<Face>{};
    const auto tgt = (p >= 1 && p - 1 <= top) ? k.faces_of_dimension(p - 1) : std::vector<Face>{};
    IntMatrix m = (p >= 1 && !src.empty()) ? incidence(src, tgt).transpose() : IntMatrix(tgt.size(), src.size());
    return FpAbHom(FpAbPresentation::free(src.size()), FpAbPresentation::free(tgt.size()), std::move(m));
  };
  for (int p = 0; p <= top; ++p) out[p] = subquotient_cohomology(boundary(p + 1), boundary(p));
  return out;
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  for (const auto& f : k.faces()) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

std::vector<std::vector<int>> connected_components(const SimplicialComplex& k) {
  const std::vector<int> verts = k.vertices();
  std::map<int, int> parent;
  for (int v : verts) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& f : k.faces())
    if (f.size() == 2) {
      const int a = find(f[0]);
      const int b = find(f[1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> groups;
  for (int v : verts) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

// ---------------------------------------------------------------- presentations

FpAbPresentation GroupPresentation::abelianization() const {
  IntMatrix m(generators, relators.size());
  for (std::size_t c = 0; c < relators.size(); ++c)
    for (int letter : relators[c]) m(static_cast<std::size_t>(std::abs(letter) - 1), c) += letter > 0 ? 1 : -1;
  return {generators, std::move(m)};
}

std::string GroupPresentation::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t g = 0; g < generators; ++g) os << (g ? ", " : " ") << 'x' << g + 1;
  os << " |";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    os << (r ? ", " : " ");
    if (relators[r].empty()) os << '1';
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      const int letter = relators[r][i];
      os << (i ? " " : "") << 'x' << std::abs(letter);
      if (letter < 0) os << "^-1";
    }
  }
  os << " >";
  return os.str();
}

GroupPresentation edge_path_presentation(const SimplicialComplex& k) {
  const auto components = connected_components(k);
  if (components.size() != 1) {
    std::ostringstream os;
    os << "edge_path_presentation: complex is not connected (" << components.size() << " components:";
    for (const auto& c : components) os << ' ' << subset_to_string(c);
    os << ')';
    throw InvalidInput(os.str());
  }

  std::map<int, std::vector<int>> adjacent;
  const auto edges = k.faces_of_dimension(1);
  for (const auto& e : edges) {
    adjacent[e[0]].push_back(e[1]);
    adjacent[e[1]].push_back(e[0]);
  }
  for (auto& [v, nbrs] : adjacent) std::sort(nbrs.begin(), nbrs.end());

  std::set<Face> tree;
  std::set<int> seen{components[0][0]};
  std::queue<int> frontier;
  frontier.push(components[0][0]);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : adjacent[v])
      if (seen.insert(w).second) {
        tree.insert(Face{std::min(v, w), std::max(v, w)});
        frontier.push(w);
      }
  }

  std::map<Face, int> generator;
  GroupPresentation p;
  for (const auto& e : edges)
    if (!tree.count(e)) generator[e] = static_cast<int>(++p.generators);

  auto letter = [&](int from, int to, Word& w) {
    auto it = generator.find(Face{std::min(from, to), std::max(from, to)});
    if (it == generator.end()) return;
    w.push_back(from < to ? it->second : -it->second);
  };
  for (const auto& t : k.faces_of_dimension(2)) {
    Word w;
    letter(t[0], t[1], w);
    letter(t[1], t[2], w);
    letter(t[2], t[0], w);
    p.relators.push_back(std::move(w));
  }
  return p;
}

namespace {

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

// Smallest rotation of w or of its inverse; identifies relators that are
// conjugate or inverse to each other.
Word relator_key(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)})
    for (std::size_t r = 0; r < base.size(); ++r) {
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
      if (rot < best) best = std::move(rot);
    }
  return best;
}

}  // namespace

GroupPresentation simplify_presentation(const GroupPresentation& input, std::size_t budget) {
  GroupPresentation p = input;
  auto spend = [&]() { return budget > 0 ? (--budget, true) : false; };

  for (;;) {
    bool changed = false;

    // Reduce words, drop trivial and duplicate relators.
    std::vector<Word> kept;
    std::set<Word> keys;
    for (const Word& r : p.relators) {
      Word reduced = cyclic_reduce(r);
      if (reduced != r) {
        if (!spend()) return p;
        changed = true;
      }
      if (reduced.empty() || !keys.insert(relator_key(reduced)).second) {
        if (!spend()) return p;
        changed = true;
        continue;
      }
      kept.push_back(std::move(reduced));
    }
    p.relators = std::move(kept);

    // Find the shortest relator in which some generator occurs exactly once.
    std::optional<std::pair<std::size_t, std::size_t>> pick;  // (relator, position)
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      const Word& w = p.relators[r];
      if (pick && p.relators[pick->first].size() <= w.size()) continue;
      std::map<int, int> count;
      for (int x : w) ++count[std::abs(x)];
      for (std::size_t i = 0; i < w.size(); ++i)
        if (count[std::abs(w[i])] == 1) {
          pick = std::make_pair(r, i);
          break;
        }
    }

    if (pick) {
      if (!spend()) return p;
      const Word& w = p.relators[pick->first];
      const std::size_t i = pick->second;
      const int g = std::abs(w[i]);
      const Word before(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      const Word after(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
      // before * g^e * after = 1
      Word replacement;
      if (w[i] > 0) {
        replacement = inverse(before);
        const Word tail = inverse(after);
        replacement.insert(replacement.end(), tail.begin(), tail.end());
      } else {
        replacement = after;
        replacement.insert(replacement.end(), before.begin(), before.end());
      }
      const Word replacement_inv = inverse(replacement);

      std::vector<Word> rewritten;
      for (std::size_t r = 0; r < p.relators.size(); ++r) {
        if (r == pick->first) continue;
        Word out;
        for (int x : p.relators[r]) {
          if (std::abs(x) == g) {
            const Word& sub = x > 0 ? replacement : replacement_inv;
            out.insert(out.end(), sub.begin(), sub.end());
          } else {
            out.push_back(x);
          }
        }
        for (int& x : out)
          if (std::abs(x) > g) x += x > 0 ? -1 : 1;
        rewritten.push_back(free_reduce(out));
      }
      p.relators = std::move(rewritten);
      --p.generators;
      changed = true;
    }

    if (!changed) break;
  }
  return p;
}

}  // namespace wcoh
