#include "arith/freegrp.hpp"

#include <algorithm>
#include <cmath>

namespace arith::fg {

namespace {

// Letter order for shortlex: a < a^-1 < b < b^-1 < ...
int letter_key(std::int8_t l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

void reduce_append(std::vector<std::int8_t>& w, std::int8_t l) {
  if (!w.empty() && w.back() == -l) w.pop_back();
  else w.push_back(l);
}

}  // namespace

Word::Word(std::vector<std::int8_t> letters) {
  letters_.reserve(letters.size());
  for (std::int8_t l : letters) {
    if (l == 0) throw std::invalid_argument("zero letter");
    reduce_append(letters_, l);
  }
}

Word Word::parse(const std::string& s) {
  if (s == "1") return Word();
  std::vector<std::int8_t> ls;
  for (char c : s) {
    if (c >= 'a' && c <= 'z') ls.push_back(static_cast<std::int8_t>(c - 'a' + 1));
    else if (c >= 'A' && c <= 'Z') ls.push_back(static_cast<std::int8_t>(-(c - 'A' + 1)));
    else throw std::invalid_argument(std::string("bad word character: ") + c);
  }
  return Word(std::move(ls));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::int8_t l : letters_)
    s.push_back(l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1));
  return s;
}

int Word::max_generator() const {
  int m = 0;
  for (std::int8_t l : letters_) m = std::max(m, std::abs(static_cast<int>(l)));
  return m;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<std::int8_t> w = letters_;
  for (std::int8_t l : rhs.letters_) reduce_append(w, l);
  Word out;
  out.letters_ = std::move(w);
  return out;
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(static_cast<std::int8_t>(-*it));
  return out;
}

Word Word::append(std::int8_t letter) const {
  std::vector<std::int8_t> w = letters_;
  reduce_append(w, letter);
  Word out;
  out.letters_ = std::move(w);
  return out;
}

bool Word::operator<(const Word& rhs) const {
  if (letters_.size() != rhs.letters_.size())
    return letters_.size() < rhs.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] != rhs.letters_[i])
      return letter_key(letters_[i]) < letter_key(rhs.letters_[i]);
  return false;
}

bool FGSet::contains(const Word& w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

FGSet make_fgset(int rank, std::vector<Word> elements) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  for (const Word& w : elements)
    if (w.max_generator() > rank) throw RankMismatch();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FGSet{rank, std::move(elements)};
}

std::vector<Word> enumerate_ball(int rank, int radius) {
  std::vector<Word> all{Word()};
  std::vector<Word> level{Word()};
  for (int r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int key = 0; key < 2 * rank; ++key) {
        std::int8_t l = static_cast<std::int8_t>(
            (key % 2 == 0) ? key / 2 + 1 : -(key / 2 + 1));
        Word e = w.append(l);
        if (e.norm() == r) next.push_back(e);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

FGSet ball(int rank, int radius) {
  return make_fgset(rank, enumerate_ball(rank, radius));
}

FGSet sphere(int rank, int radius) {
  std::vector<Word> out;
  for (Word& w : enumerate_ball(rank, radius))
    if (w.norm() == radius) out.push_back(std::move(w));
  return make_fgset(rank, std::move(out));
}

bool is_connected(const FGSet& s) {
  if (s.elements.empty()) throw std::invalid_argument("empty set");
  std::set<Word> todo(s.elements.begin(), s.elements.end());
  std::vector<Word> stack{s.elements.front()};
  todo.erase(s.elements.front());
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    for (int g = 1; g <= s.rank; ++g) {
      for (int sgn : {1, -1}) {
        Word nb = w.append(static_cast<std::int8_t>(sgn * g));
        auto it = todo.find(nb);
        if (it != todo.end()) {
          stack.push_back(*it);
          todo.erase(it);
        }
      }
    }
  }
  return todo.empty();
}

PartialTiling greedy_tiling(const FGSet& k, int radius) {
  if (k.elements.empty()) throw std::invalid_argument("empty base set");
  if (k.rank < 2 && k.size() > 1)
    throw std::invalid_argument("greedy tiling needs rank >= 2");
  if (!is_connected(k)) throw NotConnected();

  // Left-translate so the identity lies in the base set.
  Word z0 = k.elements.front();
  std::vector<Word> base_elems;
  base_elems.reserve(k.size());
  for (const Word& w : k.elements) base_elems.push_back(z0.inverse() * w);
  FGSet base = make_fgset(k.rank, std::move(base_elems));

  PartialTiling tiling;
  tiling.base = base;
  std::set<Word> covered;

  auto place = [&](const Word& h) {
    tiling.shifts.push_back(h);
    for (const Word& u : base.elements) covered.insert(h * u);
  };
  place(Word());

  std::vector<Word> enumeration = enumerate_ball(k.rank, radius);
  std::size_t level = radius;
  std::size_t idx = 0;
  while (true) {
    while (idx < enumeration.size() && covered.count(enumeration[idx])) ++idx;
    if (idx == enumeration.size()) {
      // Minimal uncovered word has norm > current horizon; grow it until we
      // know whether B_R is fully covered.
      if (level >= static_cast<std::size_t>(radius)) break;
      enumeration = enumerate_ball(k.rank, ++level);
      continue;
    }
    const Word& z = enumeration[idx];
    if (z.norm() > radius) break;  // everything in B_R is covered

    bool placed = false;
    for (const Word& w : base.elements) {
      Word h = z * w.inverse();
      bool disjoint = true;
      for (const Word& u : base.elements)
        if (covered.count(h * u)) { disjoint = false; break; }
      if (disjoint) {
        place(h);
        placed = true;
        break;
      }
    }
    if (!placed) throw NoValidShift();
  }
  return tiling;
}

TilingReport verify_partial_tiling(const FGSet& k, const std::vector<Word>& shifts,
                                   int radius) {
  TilingReport rep;
  rep.translates = shifts.size();
  std::set<Word> covered;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    // Adjacency: the new translate sits at Cayley distance 1 from the union.
    if (i > 0) {
      bool adjacent = false;
      bool overlap = false;
      for (const Word& u : k.elements) {
        Word cell = shifts[i] * u;
        if (covered.count(cell)) { overlap = true; break; }
        for (int g = 1; g <= k.rank && !adjacent; ++g)
          for (int sgn : {1, -1})
            if (covered.count(cell.append(static_cast<std::int8_t>(sgn * g)))) {
              adjacent = true;
              break;
            }
      }
      if (overlap) {
        rep.failure = "translate " + std::to_string(i) + " overlaps the union";
        return rep;
      }
      if (!adjacent) {
        rep.failure = "translate " + std::to_string(i) + " is not adjacent to the union";
        return rep;
      }
    }
    for (const Word& u : k.elements) covered.insert(shifts[i] * u);
  }
  for (const Word& w : enumerate_ball(k.rank, radius)) {
    if (!covered.count(w)) {
      rep.failure = "uncovered word " + w.str();
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

SolutionPatch tiling_to_solution_fg(const PartialTiling& tiling, int radius) {
  const FGSet& k = tiling.base;
  if (k.size() <= 1)
    throw std::invalid_argument("|K| = 1 only admits the trivial solution");

  std::set<Word> covered;
  for (const Word& h : tiling.shifts)
    for (const Word& u : k.elements) covered.insert(h * u);
  std::set<Word> shift_set(tiling.shifts.begin(), tiling.shifts.end());

  const Rat high{static_cast<long>(k.size()) - 1};
  SolutionPatch patch;
  patch.rank = k.rank;
  patch.region_radius = radius;
  for (const Word& g : enumerate_ball(k.rank, radius)) {
    Word gi = g.inverse();
    if (shift_set.count(gi)) {
      patch.assignment[g] = high;
      continue;
    }
    // gi can only become a shift later if its translate avoids the current
    // union; when it intersects, -1 is already determined.
    bool touches = false;
    for (const Word& u : k.elements)
      if (covered.count(gi * u)) { touches = true; break; }
    if (!touches) throw InsufficientCoverage();
    patch.assignment[g] = Rat(-1);
  }
  return patch;
}

NonPeriodicSolution bounded_nonperiodic_solution(const FGSet& k, int radius) {
  if (k.contains(Word()))
    throw HypothesesViolated("identity must not belong to K");
  for (const Word& w : ball(k.rank, 2).elements)
    if (!w.is_identity() && !k.contains(w))
      throw HypothesesViolated("K must contain B_2 minus the identity");
  {
    std::vector<Word> with_id = k.elements;
    with_id.push_back(Word());
    if (!is_connected(make_fgset(k.rank, std::move(with_id))))
      throw HypothesesViolated("{1} u K must be connected");
  }

  std::map<Word, Rat> x;
  std::set<Rat> used;
  std::vector<FreshLogEntry> log;

  long step = 0;
  int max_level = radius;
  std::vector<Word> eqs = enumerate_ball(k.rank, max_level);
  for (std::size_t ei = 0; ei < eqs.size(); ++ei, ++step) {
    const Word& g = eqs[ei];
    std::vector<Word> fresh;
    Rat partial_sum = 0;
    for (const Word& w : k.elements) {
      Word cell = w * g;
      auto it = x.find(cell);
      if (it == x.end()) fresh.push_back(cell);
      else partial_sum += it->second;
    }
    if (fresh.empty()) {
      if (partial_sum != 0)
        throw HypothesesViolated("fully determined equation fails to vanish");
      continue;
    }

    FreshLogEntry entry;
    entry.step = step;
    entry.equation = g;
    entry.fresh_count = static_cast<int>(fresh.size());

    // Designated cell: outermost fresh cell (max norm, shortlex-last).
    auto an = std::max_element(fresh.begin(), fresh.end());
    entry.designated_cell = *an;

    if (fresh.size() == 1) {
      entry.forced = true;
      entry.value = -partial_sum;
      entry.distinct_ok = !used.count(entry.value);
      x[*an] = entry.value;
      used.insert(entry.value);
    } else {
      Rat v(1, step + 3);
      bool first_try = true;
      while (used.count(v)) {
        v += Rat(1, 1000000 * (step + 3));
        first_try = false;
      }
      entry.value = v;
      entry.distinct_ok = first_try || !used.count(v);
      x[*an] = v;
      used.insert(v);
      Rat spread = (-partial_sum - v) / Rat(static_cast<long>(fresh.size()) - 1);
      for (const Word& c : fresh) {
        if (c == *an) continue;
        x[c] = spread;
        used.insert(spread);
      }
    }
    log.push_back(std::move(entry));
  }

  NonPeriodicSolution out;
  out.patch.rank = k.rank;
  out.patch.region_radius = radius;
  out.max_abs = 0;
  for (const Word& w : enumerate_ball(k.rank, radius)) {
    auto it = x.find(w);
    if (it == x.end())
      throw std::logic_error("ball element left unassigned");
    out.patch.assignment[w] = it->second;
    Rat a = it->second < 0 ? -it->second : it->second;
    if (a > out.max_abs) out.max_abs = a;
  }
  out.log = std::move(log);
  return out;
}

SolutionPatch parity_solution(int rank, int radius) {
  SolutionPatch patch;
  patch.rank = rank;
  patch.region_radius = radius;
  for (const Word& w : enumerate_ball(rank, radius))
    patch.assignment[w] = (w.norm() % 2 == 1) ? Rat(1) : Rat(-1);
  return patch;
}

bool check_parity_balance(const FGSet& k) {
  long odd = 0, even = 0;
  for (const Word& w : k.elements) ((w.norm() % 2) ? odd : even) += 1;
  return odd == even;
}

PatchReport verify_solution_patch(const FGSet& k, const SolutionPatch& patch) {
  PatchReport rep;
  // Candidate equations: g = w^-1 v for a cell v in the region.
  std::set<Word> candidates;
  for (const auto& [v, val] : patch.assignment)
    for (const Word& w : k.elements) candidates.insert(w.inverse() * v);

  rep.degenerate = true;
  for (const auto& [v, val] : patch.assignment)
    if (val != 0) { rep.degenerate = false; break; }

  for (const Word& g : candidates) {
    Rat sum = 0;
    bool supported = true;
    for (const Word& w : k.elements) {
      auto it = patch.assignment.find(w * g);
      if (it == patch.assignment.end()) { supported = false; break; }
      sum += it->second;
    }
    if (!supported) continue;
    ++rep.equations_checked;
    if (sum != 0) {
      rep.failure = "equation at " + g.str() + " sums to " + sum.str();
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

namespace {

struct CoverCtx {
  const FGSet* t;
  std::vector<Word> target;  // shortlex-sorted B_R
  std::set<Word> covered;
  std::vector<Word> shifts;
  long nodes = 0;
  long budget = 0;
  bool out_of_budget = false;
};

bool cover_dfs(CoverCtx& ctx) {
  if (++ctx.nodes > ctx.budget) {
    ctx.out_of_budget = true;
    return false;
  }
  auto u = std::find_if(ctx.target.begin(), ctx.target.end(),
                        [&](const Word& w) { return !ctx.covered.count(w); });
  if (u == ctx.target.end()) return true;

  std::set<Word> candidates;
  for (const Word& t : ctx.t->elements) candidates.insert(*u * t.inverse());
  for (const Word& h : candidates) {
    bool ok = true;
    for (const Word& t : ctx.t->elements)
      if (ctx.covered.count(h * t)) { ok = false; break; }
    if (!ok) continue;
    for (const Word& t : ctx.t->elements) ctx.covered.insert(h * t);
    ctx.shifts.push_back(h);
    if (cover_dfs(ctx)) return true;
    ctx.shifts.pop_back();
    for (const Word& t : ctx.t->elements) ctx.covered.erase(h * t);
    if (ctx.out_of_budget) return false;
  }
  return false;
}

}  // namespace

CoverResult cover_search(const FGSet& t, int radius, long budget) {
  if (t.elements.empty()) throw std::invalid_argument("empty tile set");
  CoverCtx ctx;
  ctx.t = &t;
  ctx.target = enumerate_ball(t.rank, radius);
  ctx.budget = budget;

  CoverResult res;
  bool sat = cover_dfs(ctx);
  res.nodes = ctx.nodes;
  if (sat) {
    res.status = CoverStatus::SAT;
    res.shifts = ctx.shifts;
  } else {
    res.status = ctx.out_of_budget ? CoverStatus::UNKNOWN : CoverStatus::UNSAT;
  }
  return res;
}

}  // namespace arith::fg
