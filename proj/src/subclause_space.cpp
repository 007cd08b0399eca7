#include "hypersat/subclause_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypersat {

namespace {

std::uint64_t pair_key(Lit a, Lit b) {
  if (b < a) std::swap(a, b);
  return (std::uint64_t{a.code()} << 32) | b.code();
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_lit(const SubClauseSpace& space, Lit a) {
  if (a.var() >= space.num_vars())
    throw std::out_of_range(a.str() + " outside space over " + std::to_string(space.num_vars()) + " variables");
}

void check_id(const SubClauseSpace& space, SubClauseId id) {
  if (id >= space.size()) throw std::out_of_range("unknown sub-clause id " + std::to_string(id));
}

} // namespace

SubClause::SubClause(Lit a, Lit b) : first_(a), second_(b) {
  if (a.var() == b.var()) throw std::invalid_argument("sub-clause needs two distinct variables");
  if (second_ < first_) std::swap(first_, second_);
}

Lit SubClause::other(Lit l) const {
  if (l == first_) return second_;
  if (l == second_) return first_;
  throw std::invalid_argument(l.str() + " not in sub-clause " + str());
}

std::string SubClause::str() const { return "(" + first_.str() + " v " + second_.str() + ")"; }

bool enumeration_less(const SubClause& a, const SubClause& b) {
  auto key = [](const SubClause& s) {
    return std::array<std::uint32_t, 4>{s.first().var(), s.first().is_positive() ? 1u : 0u, s.second().var(),
                                        s.second().is_positive() ? 1u : 0u};
  };
  return key(a) < key(b);
}

SubClauseSpace::SubClauseSpace(const Formula& f)
    : num_vars_(f.num_vars()), created_(2 * f.num_vars()), containing_(2 * f.num_vars()) {
  if (f.width() != 3 && f.num_clauses() > 0)
    throw std::invalid_argument("sub-clause space needs a width-3 formula, got width " + std::to_string(f.width()));

  for (std::size_t cid = 0; cid < f.num_clauses(); ++cid) {
    const Clause& c = f.clause(static_cast<ClauseId>(cid));
    for (std::size_t drop = 0; drop < 3; ++drop) {
      const Lit removed = c[drop];
      const Lit a = c[(drop + 1) % 3];
      const Lit b = c[(drop + 2) % 3];
      auto [it, fresh] = index_.try_emplace(pair_key(a, b), static_cast<SubClauseId>(subclauses_.size()));
      const SubClauseId id = it->second;
      if (fresh) {
        subclauses_.emplace_back(a, b);
        origins_.emplace_back();
      }
      origins_[id].push_back(Origin{~removed, static_cast<ClauseId>(cid)});
    }
  }

  creators_.resize(subclauses_.size());
  parents_.resize(subclauses_.size());
  for (SubClauseId id = 0; id < subclauses_.size(); ++id) {
    sort_unique(origins_[id]);
    for (const Origin& o : origins_[id]) {
      creators_[id].push_back(o.creator);
      parents_[id].push_back(o.parent);
      created_[o.creator.code()].push_back(id);
    }
    sort_unique(creators_[id]);
    sort_unique(parents_[id]);
    containing_[subclauses_[id].first().code()].push_back(id);
    containing_[subclauses_[id].second().code()].push_back(id);
  }
  for (auto& ids : created_) sort_unique(ids);
}

std::optional<SubClauseId> SubClauseSpace::find(Lit a, Lit b) const {
  auto it = index_.find(pair_key(a, b));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const SubClauseId> SubClauseSpace::created(Lit a) const {
  check_lit(*this, a);
  return created_[a.code()];
}

std::span<const SubClauseId> SubClauseSpace::containing(Lit a) const {
  check_lit(*this, a);
  return containing_[a.code()];
}

std::span<const SubClauseId> subclauses_of(const SubClauseSpace& space, Lit a) { return space.created(a); }

IdSet subsat(const SubClauseSpace& space, Lit a) {
  auto ids = space.containing(a);
  return {ids.begin(), ids.end()};
}

IdSet subsat(const SubClauseSpace& space, Lit a, std::span<const SubClauseId> active) {
  auto ids = space.containing(a);
  IdSet out;
  std::set_intersection(ids.begin(), ids.end(), active.begin(), active.end(), std::back_inserter(out));
  return out;
}

std::vector<Lit> unitclauses(const SubClauseSpace& space, Lit a) {
  std::vector<Lit> out;
  for (SubClauseId id : space.containing(~a)) out.push_back(space.at(id).other(~a));
  sort_unique(out);
  return out;
}

std::vector<Lit> creators(const SubClauseSpace& space, std::span<const SubClauseId> ids) {
  std::vector<Lit> out;
  for (SubClauseId id : ids) {
    check_id(space, id);
    auto c = space.creators_of(id);
    out.insert(out.end(), c.begin(), c.end());
  }
  sort_unique(out);
  return out;
}

std::vector<ClauseId> parents(const SubClauseSpace& space, std::span<const SubClauseId> ids) {
  std::vector<ClauseId> out;
  for (SubClauseId id : ids) {
    check_id(space, id);
    auto p = space.parents_of(id);
    out.insert(out.end(), p.begin(), p.end());
  }
  sort_unique(out);
  return out;
}

SpaceCensus space_census(const SubClauseSpace& space, const Formula& f) {
  const std::size_t n = f.num_vars();
  if (n < 2) throw std::invalid_argument("census needs n >= 2, got " + std::to_string(n));
  SpaceCensus c;
  c.possible = 2 * n * (n - 1);
  c.actual = space.size();
  c.per_clause = 3 * f.num_clauses();
  c.ratio = 3.0 * static_cast<double>(f.num_clauses()) / (2.0 * static_cast<double>(n) * static_cast<double>(n - 1));
  return c;
}

InteractionMatrix::InteractionMatrix(const SubClauseSpace& space)
    : rows_(space.size()), cols_(2 * space.num_vars()), cells_(rows_ * cols_) {
  for (SubClauseId id = 0; id < rows_; ++id) {
    Cell* row = &cells_[id * cols_];
    const SubClause& s = space.at(id);
    for (Lit a : space.creators_of(id)) row[display_index(a)].kind = Kind::created;
    for (Lit m : {s.first(), s.second()}) {
      row[display_index(m)].kind = Kind::solves;
      row[display_index(~m)] = Cell{Kind::unit, s.other(m)};
    }
  }
}

Lit InteractionMatrix::column_literal(std::size_t col) const {
  return Lit::make(static_cast<Var>(col / 2), col % 2 == 0);
}

std::string InteractionMatrix::to_csv() const {
  std::string out = "subclause";
  for (std::size_t c = 0; c < cols_; ++c) out += "," + column_literal(c).str();
  out += "\n";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "s" + std::to_string(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      out += ",";
      const Cell& cell = cells_[r * cols_ + c];
      switch (cell.kind) {
        case Kind::created: out += "c"; break;
        case Kind::solves: out += "s"; break;
        case Kind::unit: out += cell.unit.str(); break;
        case Kind::empty: break;
      }
    }
    out += "\n";
  }
  return out;
}

} // namespace hypersat
