#include "braidkit/coset.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace braidkit {

namespace {

struct OverflowSignal {
  std::int64_t rows;
};

// Raised when the row cap is hit; the driver runs a lookahead pass (which can
// free rows through coincidences) and restarts, or gives up.
struct NeedSpace {};

// HLT-style Todd-Coxeter machine.  Cosets are rows of a flat table, numbered
// from 1; row 0 is a sentinel so that entry 0 means "undefined".  Rows of
// cosets removed by coincidences are recycled first-in-first-out, so the
// enforced cap is the high-water mark of rows in use.
class Machine {
 public:
  Machine(int generators, std::int64_t cap)
      : ngen_(generators), cols_(2 * generators), cap_(cap) {
    table_.assign(static_cast<size_t>(cols_), 0);  // sentinel row 0
    parent_.push_back(0);
    define_root();
  }

  static int column(int gen, bool inverse) { return 2 * gen + (inverse ? 1 : 0); }
  static int inv(int col) { return col ^ 1; }

  std::int32_t get(std::int32_t c, int x) const {
    return table_[static_cast<size_t>(c) * cols_ + x];
  }
  void set(std::int32_t c, int x, std::int32_t v) {
    table_[static_cast<size_t>(c) * cols_ + x] = v;
  }

  bool live(std::int32_t c) const { return parent_[static_cast<size_t>(c)] == c; }
  std::int64_t live_count() const { return live_; }
  std::int64_t rows_in_table() const {
    return static_cast<std::int64_t>(parent_.size()) - 1;
  }

  std::int32_t define(std::int32_t from, int x) {
    if (++total_defines_ > 200 * cap_) throw OverflowSignal{rows_in_table()};
    std::int32_t c;
    if (!free_rows_.empty()) {
      c = free_rows_.front();
      free_rows_.pop_front();
      parent_[static_cast<size_t>(c)] = c;
    } else {
      if (rows_in_table() >= cap_) throw NeedSpace{};
      c = static_cast<std::int32_t>(parent_.size());
      parent_.push_back(c);
      table_.resize(table_.size() + static_cast<size_t>(cols_), 0);
    }
    ++live_;
    set(from, x, c);
    set(c, inv(x), from);
    activity_ = true;
    return c;
  }

  // Trace `word` (a column sequence) from coset a, defining cosets to close
  // the gap and merging the front/back meeting point.
  void scan_and_fill(std::int32_t a, const std::vector<int>& word) {
    if (word.empty()) return;
    int i = 0, j = static_cast<int>(word.size()) - 1;
    std::int32_t f = a, b = a;
    for (;;) {
      while (i <= j && get(f, word[static_cast<size_t>(i)]) != 0)
        f = get(f, word[static_cast<size_t>(i)]), ++i;
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, inv(word[static_cast<size_t>(j)])) != 0)
        b = get(b, inv(word[static_cast<size_t>(j)])), --j;
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, word[static_cast<size_t>(i)], b);
        set(b, inv(word[static_cast<size_t>(i)]), f);
        activity_ = true;
        return;
      }
      f = define(f, word[static_cast<size_t>(i)]);
      ++i;
    }
  }

  void fill_row(std::int32_t a) {
    for (int x = 0; x < cols_; ++x)
      if (live(a) && get(a, x) == 0) define(a, x);
  }

  // Coincidence-only sweep: scan every relator at every live coset, applying
  // deductions and coincidences but defining nothing.  Returns the number of
  // rows freed.
  std::int64_t lookahead(const std::vector<std::vector<int>>& relators) {
    size_t before = free_rows_.size();
    for (std::int32_t a = 1; a <= rows_in_table(); ++a) {
      if (!live(a)) continue;
      for (const auto& r : relators) {
        if (!live(a)) break;
        scan(a, r);
      }
    }
    return static_cast<std::int64_t>(free_rows_.size() - before);
  }

  bool take_activity() { return std::exchange(activity_, false); }

  // True when every relator traces back to its start from every live coset,
  // checked directly against the table without defining anything.
  bool scans_closed(const std::vector<std::vector<int>>& relators) const {
    for (std::int32_t a = 1; a <= rows_in_table(); ++a) {
      if (!live(a)) continue;
      for (int x = 0; x < cols_; ++x)
        if (get(a, x) == 0) return false;
      for (const auto& r : relators) {
        std::int32_t c = a;
        for (int x : r) c = get(c, x);
        if (c != a) return false;
      }
    }
    return true;
  }

  CosetTable compact() const {
    std::vector<std::int32_t> rank(parent_.size(), 0);
    std::int32_t next = 0;
    for (std::int32_t c = 1; c <= rows_in_table(); ++c)
      if (live(c)) rank[static_cast<size_t>(c)] = ++next;
    CosetTable out;
    out.generators = ngen_;
    out.entries.reserve(static_cast<size_t>(next) * cols_);
    for (std::int32_t c = 1; c <= rows_in_table(); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x)
        out.entries.push_back(rank[static_cast<size_t>(get(c, x))]);
    }
    return out;
  }

 private:
  void scan(std::int32_t a, const std::vector<int>& word) {
    int i = 0, j = static_cast<int>(word.size()) - 1;
    std::int32_t f = a, b = a;
    while (i <= j && get(f, word[static_cast<size_t>(i)]) != 0)
      f = get(f, word[static_cast<size_t>(i)]), ++i;
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && get(b, inv(word[static_cast<size_t>(j)])) != 0)
      b = get(b, inv(word[static_cast<size_t>(j)])), --j;
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      set(f, word[static_cast<size_t>(i)], b);
      set(b, inv(word[static_cast<size_t>(i)]), f);
      activity_ = true;
    }
  }

  void define_root() {
    parent_.push_back(1);
    table_.resize(table_.size() + static_cast<size_t>(cols_), 0);
    live_ = 1;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<size_t>(r)] != r) r = parent_[static_cast<size_t>(r)];
    while (parent_[static_cast<size_t>(c)] != r) {
      std::int32_t next = parent_[static_cast<size_t>(c)];
      parent_[static_cast<size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    std::int32_t kept = std::min(k, l), dead = std::max(k, l);
    parent_[static_cast<size_t>(dead)] = kept;
    --live_;
    queue_.push_back(dead);
    activity_ = true;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      std::int32_t g = queue_.front();
      queue_.pop_front();
      for (int x = 0; x < cols_; ++x) {
        std::int32_t d = get(g, x);
        if (d == 0) continue;
        if (get(d, inv(x)) == g) set(d, inv(x), 0);
        set(g, x, 0);
        std::int32_t mu = rep(g), nu = rep(d);
        if (std::int32_t t = get(mu, x); t != 0)
          merge(nu, t);
        else if (std::int32_t u = get(nu, inv(x)); u != 0)
          merge(mu, u);
        else {
          set(mu, x, nu);
          set(nu, inv(x), mu);
        }
      }
      free_rows_.push_back(g);  // row is now all zero
    }
  }

  int ngen_;
  int cols_;
  std::int64_t cap_;
  std::int64_t live_ = 0;
  std::int64_t total_defines_ = 0;
  bool activity_ = false;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::deque<std::int32_t> queue_;      // dead cosets awaiting processing
  std::deque<std::int32_t> free_rows_;  // processed dead rows, reusable
};

std::vector<int> flatten(const Word& w) {
  std::vector<int> cols;
  for (const auto& l : w.letters()) {
    int col = Machine::column(l.gen, l.exp < 0);
    for (std::int64_t k = 0; k < std::llabs(l.exp); ++k) cols.push_back(col);
  }
  return cols;
}

}  // namespace

EnumerationResult enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                            std::int64_t max_cosets) {
  if (p.kind != Kind::group)
    throw MonoidPresentation("enumerate: coset enumeration is undefined for monoids");
  if (max_cosets < 1) throw Error("enumerate: max_cosets must be at least 1");

  std::vector<std::vector<int>> relators;
  for (const auto& rel : p.relations) {
    Word relator = free_reduce(concat(rel.lhs, invert(rel.rhs)));
    if (relator.letters().empty()) continue;
    relators.push_back(flatten(relator));
  }
  std::vector<std::vector<int>> subwords;
  for (const auto& w : subgroup) {
    if (!w.alphabet()->same_as(*p.alphabet))
      throw UnknownGenerator("enumerate: subgroup word over a different alphabet");
    std::vector<int> cols = flatten(free_reduce(w));
    if (!cols.empty()) subwords.push_back(std::move(cols));
  }

  Machine m(p.alphabet->size(), max_cosets);
  try {
    for (bool done = false; !done;) {
      try {
        for (const auto& w : subwords) m.scan_and_fill(1, w);
        do {
          m.take_activity();
          for (std::int32_t a = 1; a <= m.rows_in_table(); ++a) {
            if (!m.live(a)) continue;
            for (const auto& r : relators) {
              if (!m.live(a)) break;
              m.scan_and_fill(a, r);
            }
            if (m.live(a)) m.fill_row(a);
          }
        } while (m.take_activity());
        done = true;
      } catch (const NeedSpace&) {
        if (m.lookahead(relators) == 0) return Overflow{m.rows_in_table()};
      }
    }
  } catch (const OverflowSignal& o) {
    return Overflow{o.rows};
  }

  if (!m.scans_closed(relators))
    throw std::logic_error("enumerate: closed table failed the verification pass");
  return Completed{m.live_count(), m.compact()};
}

EnumerationResult index_of_parabolic(const Presentation& p,
                                     const std::vector<Word>& generator_subset_words,
                                     std::int64_t max_cosets) {
  return enumerate(p, generator_subset_words, max_cosets);
}

}  // namespace braidkit
