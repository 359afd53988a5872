// words.cpp -- bounded congruence closure of word presentations and the
// derived decision procedures

#include "mvs/words.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include "mvs/error.hpp"

namespace mvs {

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

} // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.size() > 255) {
    throw SizeExceeded("alphabet has " + std::to_string(letters_.size()) +
                       " letters; at most 255 are supported");
  }
  for (const auto& name : letters_) {
    if (name.empty()) {
      throw SemanticError("empty letter name");
    }
  }
  auto sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw SemanticError("duplicate letter name");
  }
}

std::optional<Letter> Alphabet::id_of(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == name) {
      return static_cast<Letter>(i);
    }
  }
  return std::nullopt;
}

bool Alphabet::all_single_char() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), ids_(std::move(letters)) {
  if (!alphabet_) {
    throw DomainMismatch("word has no alphabet");
  }
  for (Letter id : ids_) {
    if (id >= alphabet_->size()) {
      throw DomainMismatch("letter id out of range");
    }
  }
}

std::string Word::str() const {
  if (ids_.empty()) {
    return "0";
  }
  std::string out;
  const bool glue = alphabet_->all_single_char();
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0 && !glue) {
      out += ',';
    }
    out += alphabet_->letter(ids_[i]);
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  if (!u.same_alphabet(v)) {
    throw AlphabetMismatch("cannot concatenate words over different alphabets");
  }
  std::vector<Letter> ids = u.ids();
  ids.insert(ids.end(), v.ids().begin(), v.ids().end());
  return Word(u.alphabet(), std::move(ids));
}

Presentation::Presentation(std::vector<std::string> letters,
                           std::vector<std::array<std::string, 3>> relations)
    : alphabet_(std::make_shared<Alphabet>(std::move(letters))) {
  rels_.reserve(relations.size());
  for (const auto& r : relations) {
    Rel rel{};
    Letter* slots[3] = {&rel.a, &rel.b, &rel.c};
    for (int i = 0; i < 3; ++i) {
      auto id = alphabet_->id_of(r[i]);
      if (!id) {
        throw SemanticError("unknown letter '" + r[i] + "' in relation");
      }
      *slots[i] = *id;
    }
    rels_.push_back(rel);
  }
  std::sort(rels_.begin(), rels_.end());
  rels_.erase(std::unique(rels_.begin(), rels_.end()), rels_.end());
}

Presentation::Presentation(AlphabetPtr alphabet, std::vector<Rel> relations)
    : alphabet_(std::move(alphabet)), rels_(std::move(relations)) {
  if (!alphabet_) {
    throw DomainMismatch("presentation has no alphabet");
  }
  for (const Rel& r : rels_) {
    if (r.a >= alphabet_->size() || r.b >= alphabet_->size() || r.c >= alphabet_->size()) {
      throw DomainMismatch("relation letter out of range");
    }
  }
  std::sort(rels_.begin(), rels_.end());
  rels_.erase(std::unique(rels_.begin(), rels_.end()), rels_.end());
}

Word Presentation::word_from_ids(std::vector<Letter> ids) const {
  return Word(alphabet_, std::move(ids));
}

Word Presentation::parse_word(std::string_view text) const {
  if (text == "0" && !alphabet_->id_of("0")) {
    return Word::empty(alphabet_);
  }
  if (text.empty()) {
    throw SemanticError("empty word must be written as 0");
  }
  std::vector<Letter> ids;
  if (alphabet_->all_single_char()) {
    for (char ch : text) {
      auto id = alphabet_->id_of(std::string_view(&ch, 1));
      if (!id) {
        throw SemanticError(std::string("unknown letter '") + ch + "' in word");
      }
      ids.push_back(*id);
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
      while (!tok.empty() && tok.front() == ' ') {
        tok.remove_prefix(1);
      }
      while (!tok.empty() && tok.back() == ' ') {
        tok.remove_suffix(1);
      }
      if (tok.empty()) {
        throw SemanticError("empty letter name in word");
      }
      auto id = alphabet_->id_of(tok);
      if (!id) {
        throw SemanticError("unknown letter '" + std::string(tok) + "' in word");
      }
      ids.push_back(*id);
      if (comma == std::string_view::npos) {
        break;
      }
      pos = comma + 1;
    }
  }
  return Word(alphabet_, std::move(ids));
}

bool one_step(const Word& u, const Word& v, Rel rel) {
  if (!u.same_alphabet(v)) {
    throw AlphabetMismatch("cannot compare words over different alphabets");
  }
  if (u.ids() == v.ids()) {
    return true;
  }
  const Word* longer = &u;
  const Word* shorter = &v;
  if (longer->length() < shorter->length()) {
    std::swap(longer, shorter);
  }
  if (longer->length() != shorter->length() + 1) {
    return false;
  }
  const auto& lw = longer->ids();
  const auto& sw = shorter->ids();
  for (std::size_t i = 0; i + 1 < lw.size(); ++i) {
    if (lw[i] != rel.a || lw[i + 1] != rel.b) {
      continue;
    }
    // shortened = lw with positions i, i+1 replaced by rel.c
    bool match = true;
    for (std::size_t t = 0; t < sw.size() && match; ++t) {
      Letter expect = t < i ? lw[t] : t == i ? rel.c : lw[t + 1];
      match = sw[t] == expect;
    }
    if (match) {
      return true;
    }
  }
  return false;
}

std::size_t BoundedCongruence::rank_ids(const std::vector<Letter>& w) const {
  const std::size_t k = pres_.alphabet().size();
  std::size_t rank = 0;
  for (Letter id : w) {
    rank = rank * k + id;
  }
  return offsets_[w.size()] + rank;
}

std::vector<Letter> BoundedCongruence::decode_ids(std::size_t word_id) const {
  std::size_t len = 0;
  while (len + 1 < offsets_.size() && offsets_[len + 1] <= word_id) {
    ++len;
  }
  const std::size_t k = pres_.alphabet().size();
  std::size_t rank = word_id - offsets_[len];
  std::vector<Letter> ids(len);
  for (std::size_t t = len; t-- > 0;) {
    ids[t] = static_cast<Letter>(rank % k);
    rank /= k;
  }
  return ids;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>>
BoundedCongruence::neighbours_of(const std::vector<Letter>& w) const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const auto& rels = pres_.relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const Rel rel = rels[r];
    if (w.size() >= 2) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] != rel.a || w[i + 1] != rel.b) {
          continue;
        }
        std::vector<Letter> shorter(w.size() - 1);
        for (std::size_t t = 0; t < shorter.size(); ++t) {
          shorter[t] = t < i ? w[t] : t == i ? rel.c : w[t + 1];
        }
        out.emplace_back(static_cast<std::uint32_t>(rank_ids(shorter)),
                         static_cast<std::uint32_t>(r));
      }
    }
    if (w.size() + 1 <= bound_) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != rel.c) {
          continue;
        }
        std::vector<Letter> longer(w.size() + 1);
        for (std::size_t t = 0; t < longer.size(); ++t) {
          longer[t] = t < i ? w[t] : t == i ? rel.a : t == i + 1 ? rel.b : w[t - 1];
        }
        out.emplace_back(static_cast<std::uint32_t>(rank_ids(longer)),
                         static_cast<std::uint32_t>(r));
      }
    }
  }
  return out;
}

std::size_t BoundedCongruence::encode(const Word& w) const {
  if (!(*w.alphabet() == pres_.alphabet())) {
    throw AlphabetMismatch("word is over a different alphabet");
  }
  if (w.length() > bound_) {
    throw BoundTooSmall("word " + w.str() + " has length " + std::to_string(w.length()) +
                        "; bound is " + std::to_string(bound_));
  }
  return rank_ids(w.ids());
}

Word BoundedCongruence::decode(std::size_t word_id) const {
  if (word_id >= word_count_) {
    throw DomainMismatch("word id out of range");
  }
  return Word(pres_.alphabet_ptr(), decode_ids(word_id));
}

std::size_t BoundedCongruence::class_of(const Word& w) const { return class_ids_[encode(w)]; }

bool BoundedCongruence::same_class(const Word& u, const Word& v) const {
  return class_of(u) == class_of(v);
}

Word BoundedCongruence::representative(std::size_t cls) const {
  return decode(class_reps_[cls]);
}

std::vector<Word> BoundedCongruence::members(std::size_t cls) const {
  std::vector<Word> out;
  for (std::size_t id = 0; id < word_count_; ++id) {
    if (class_ids_[id] == cls) {
      out.push_back(decode(id));
    }
  }
  return out;
}

BoundedCongruence::Chain BoundedCongruence::chain(const Word& u, const Word& v) const {
  const std::size_t su = encode(u);
  const std::size_t sv = encode(v);
  if (class_ids_[su] != class_ids_[sv]) {
    throw DomainMismatch("words " + u.str() + " and " + v.str() +
                         " are not equivalent within the bound");
  }
  Chain out;
  if (su == sv) {
    out.words.push_back(decode(su));
    return out;
  }
  std::vector<std::uint32_t> parent(word_count_, kNoParent);
  std::vector<std::uint32_t> via(word_count_, 0);
  std::deque<std::uint32_t> queue;
  parent[su] = static_cast<std::uint32_t>(su);
  queue.push_back(static_cast<std::uint32_t>(su));
  while (!queue.empty() && parent[sv] == kNoParent) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (auto [y, r] : neighbours_of(decode_ids(x))) {
      if (parent[y] != kNoParent) {
        continue;
      }
      parent[y] = x;
      via[y] = r;
      queue.push_back(y);
    }
  }
  assert(parent[sv] != kNoParent);
  std::vector<std::uint32_t> path;
  for (std::uint32_t x = static_cast<std::uint32_t>(sv); x != su; x = parent[x]) {
    path.push_back(x);
  }
  path.push_back(static_cast<std::uint32_t>(su));
  std::reverse(path.begin(), path.end());
  for (std::size_t t = 0; t < path.size(); ++t) {
    out.words.push_back(decode(path[t]));
    if (t + 1 < path.size()) {
      out.via.push_back(pres_.relations()[via[path[t + 1]]]);
    }
  }
  return out;
}

BoundedCongruence close(const Presentation& p, std::size_t bound, std::uint64_t node_budget) {
  if (bound < 2) {
    throw BoundTooSmall("bound must be at least 2; got " + std::to_string(bound));
  }
  if (node_budget == 0) {
    node_budget = kDefaultWordBudget;
  }
  const std::size_t k = p.alphabet().size();
  BoundedCongruence bc(p);
  bc.bound_ = bound;
  bc.offsets_.assign(bound + 2, 0);
  std::uint64_t total = 1;
  std::uint64_t pow = 1;
  bc.offsets_[1] = 1;
  for (std::size_t len = 1; len <= bound; ++len) {
    if (k > 0) {
      if (pow > node_budget / k) {
        throw SizeExceeded("word universe exceeds the budget of " +
                           std::to_string(node_budget) + " words");
      }
      pow *= k;
      total += pow;
    }
    bc.offsets_[len + 1] = total;
    if (total > node_budget) {
      throw SizeExceeded("word universe has " + std::to_string(total) +
                         " words; budget is " + std::to_string(node_budget));
    }
  }
  if (total > std::numeric_limits<std::uint32_t>::max()) {
    throw SizeExceeded("word universe has " + std::to_string(total) + " words");
  }
  const std::size_t n = static_cast<std::size_t>(total);
  bc.word_count_ = n;

  // Connectivity over the one-step graph: every shortening edge is drawn
  // from its longer endpoint, which covers the whole edge set.
  std::vector<std::uint32_t> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&uf](std::uint32_t x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  };
  auto unite = [&](std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return;
    }
    if (x < y) {
      uf[y] = x;
    } else {
      uf[x] = y;
    }
  };
  const auto& rels = p.relations();
  for (std::size_t id = bc.offsets_[2]; id < n; ++id) {
    const std::vector<Letter> w = bc.decode_ids(id);
    for (const Rel& rel : rels) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] != rel.a || w[i + 1] != rel.b) {
          continue;
        }
        std::vector<Letter> shorter(w.size() - 1);
        for (std::size_t t = 0; t < shorter.size(); ++t) {
          shorter[t] = t < i ? w[t] : t == i ? rel.c : w[t + 1];
        }
        unite(static_cast<std::uint32_t>(id),
              static_cast<std::uint32_t>(bc.rank_ids(shorter)));
      }
    }
  }

  bc.class_ids_.assign(n, 0);
  std::vector<std::uint32_t> root_class(n, 0);
  for (std::size_t id = 0; id < n; ++id) {
    const std::uint32_t root = find(static_cast<std::uint32_t>(id));
    if (root == id) {
      root_class[id] = static_cast<std::uint32_t>(bc.class_reps_.size());
      bc.class_reps_.push_back(static_cast<std::uint32_t>(id));
    }
    bc.class_ids_[id] = root_class[root];
  }

  // A class stays complete as the bound grows unless a member of maximal
  // length can still be lengthened, which happens exactly when it contains
  // the single-letter side of some relation.
  bc.exact_.assign(bc.class_reps_.size(), 1);
  std::vector<char> rhs(k, 0);
  for (const Rel& rel : rels) {
    rhs[rel.c] = 1;
  }
  for (std::size_t id = bc.offsets_[bound]; id < n; ++id) {
    const std::vector<Letter> w = bc.decode_ids(id);
    if (std::any_of(w.begin(), w.end(), [&rhs](Letter l) { return rhs[l] != 0; })) {
      bc.exact_[bc.class_ids_[id]] = 0;
    }
  }
  return bc;
}

WordsEqual words_equal(const Presentation& p, const Word& u, const Word& v, std::size_t bound,
                       std::uint64_t node_budget) {
  if (!(*u.alphabet() == p.alphabet()) || !(*v.alphabet() == p.alphabet())) {
    throw AlphabetMismatch("words are not over the presentation's alphabet");
  }
  for (const Word* w : {&u, &v}) {
    if (w->length() > bound) {
      throw BoundTooSmall("word " + w->str() + " has length " + std::to_string(w->length()) +
                          "; bound is " + std::to_string(bound));
    }
  }
  const BoundedCongruence bc = close(p, bound, node_budget);
  WordsEqual out;
  if (bc.same_class(u, v)) {
    out.kind = TriKind::Proved;
    out.chain = bc.chain(u, v);
    return out;
  }
  if (bc.exact(bc.class_of(u))) {
    out.kind = TriKind::Refuted;
    out.exact_side = u;
  } else if (bc.exact(bc.class_of(v))) {
    out.kind = TriKind::Refuted;
    out.exact_side = v;
  }
  return out;
}

std::size_t MonoidModel::eval(const Word& w) const {
  std::size_t val = 0;
  for (Letter l : w.ids()) {
    val = table[val][assignment[l]];
  }
  return val;
}

bool MonoidModel::satisfies(const Presentation& p) const {
  for (const Rel& r : p.relations()) {
    if (table[assignment[r.a]][assignment[r.b]] != assignment[r.c]) {
      return false;
    }
  }
  return true;
}

namespace {

/// Depth-first enumeration of monoid tables of a fixed size, identity at
/// element 0, free cells in row-major order with ascending values. Partial
/// tables are pruned as soon as a fully determined associativity triple
/// fails, so complete tables arrive in lexicographic order.
class ModelSearch {
public:
  ModelSearch(const Presentation& p, const Word& u, const Word& v, std::size_t size)
      : pres_(p), u_(u), v_(v), size_(size),
        table_(size, std::vector<std::size_t>(size, 0)) {
    for (std::size_t j = 0; j < size_; ++j) {
      table_[0][j] = j;
      table_[j][0] = j;
    }
    for (std::size_t i = 1; i < size_; ++i) {
      for (std::size_t j = 1; j < size_; ++j) {
        cells_.push_back({i, j});
      }
    }
  }

  std::optional<MonoidModel> run() {
    if (dfs(0)) {
      return found_;
    }
    return std::nullopt;
  }

private:
  bool known(std::size_t i, std::size_t j, std::size_t filled) const {
    if (i == 0 || j == 0) {
      return true;
    }
    return (i - 1) * (size_ - 1) + (j - 1) < filled;
  }

  bool associative_so_far(std::size_t filled) const {
    for (std::size_t x = 0; x < size_; ++x) {
      for (std::size_t y = 0; y < size_; ++y) {
        if (!known(x, y, filled)) {
          continue;
        }
        const std::size_t xy = table_[x][y];
        for (std::size_t z = 0; z < size_; ++z) {
          if (!known(y, z, filled) || !known(xy, z, filled)) {
            continue;
          }
          const std::size_t yz = table_[y][z];
          if (!known(x, yz, filled)) {
            continue;
          }
          if (table_[xy][z] != table_[x][yz]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool try_assignments() {
    const std::size_t k = pres_.alphabet().size();
    std::vector<std::size_t> asg(k, 0);
    MonoidModel model{size_, table_, asg};
    while (true) {
      model.assignment = asg;
      if (model.satisfies(pres_) && model.eval(u_) != model.eval(v_)) {
        found_ = model;
        return true;
      }
      std::size_t pos = k;
      while (pos > 0 && asg[pos - 1] + 1 == size_) {
        asg[--pos] = 0;
      }
      if (pos == 0) {
        return false;
      }
      ++asg[pos - 1];
    }
  }

  bool dfs(std::size_t filled) {
    if (filled == cells_.size()) {
      return try_assignments();
    }
    auto [i, j] = cells_[filled];
    for (std::size_t val = 0; val < size_; ++val) {
      table_[i][j] = val;
      if (associative_so_far(filled + 1) && dfs(filled + 1)) {
        return true;
      }
    }
    table_[i][j] = 0;
    return false;
  }

  const Presentation& pres_;
  const Word& u_;
  const Word& v_;
  std::size_t size_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  MonoidModel found_;
};

} // namespace

std::optional<MonoidModel> find_separating_model(const Presentation& p, const Word& u,
                                                 const Word& v, std::size_t max_size) {
  if (!(*u.alphabet() == p.alphabet()) || !(*v.alphabet() == p.alphabet())) {
    throw AlphabetMismatch("words are not over the presentation's alphabet");
  }
  for (std::size_t size = 1; size <= max_size; ++size) {
    ModelSearch search(p, u, v, size);
    if (auto model = search.run()) {
      return model;
    }
  }
  return std::nullopt;
}

M4Check check_m4(const Presentation& p, std::size_t bound, std::uint64_t node_budget) {
  const BoundedCongruence bc = close(p, bound, node_budget);
  const std::size_t k = p.alphabet().size();

  // Letters dividing a class: exactly the first letters of its members.
  std::vector<std::vector<char>> first(bc.class_count(), std::vector<char>(k, 0));
  for (std::size_t id = 1; id < bc.word_count(); ++id) {
    const Word w = bc.decode(id);
    first[bc.class_of_id(id)][w.ids().front()] = 1;
  }

  M4Check out;
  out.kind = TriKind::Proved;
  std::optional<std::array<Letter, 2>> refuted;
  std::optional<std::array<Letter, 2>> undecided;
  for (std::size_t a = 0; a + 1 < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const std::size_t ca = bc.class_of(p.word_from_ids({static_cast<Letter>(a)}));
      const std::size_t cb = bc.class_of(p.word_from_ids({static_cast<Letter>(b)}));
      std::optional<Letter> common;
      for (std::size_t c = 0; c < k; ++c) {
        if (first[ca][c] && first[cb][c]) {
          common = static_cast<Letter>(c);
          break;
        }
      }
      const Letter la = static_cast<Letter>(a);
      const Letter lb = static_cast<Letter>(b);
      if (common) {
        out.witnesses.push_back({la, lb, *common});
        continue;
      }
      if (bc.exact(ca) && bc.exact(cb)) {
        if (!refuted) {
          refuted = {la, lb};
        }
      } else if (!undecided) {
        undecided = {la, lb};
      }
    }
  }
  if (refuted) {
    out.kind = TriKind::Refuted;
    out.failing_pair = refuted;
    out.witnesses.clear();
  } else if (undecided) {
    out.kind = TriKind::Unknown;
    out.undecided_pair = undecided;
    out.witnesses.clear();
  }
  return out;
}

Presentation present_mvs(const FiniteMvs& m) {
  std::vector<std::string> letters;
  for (ElemId i = 1; i < m.card(); ++i) {
    letters.push_back(m.name(i));
  }
  AlphabetPtr alphabet = std::make_shared<Alphabet>(std::move(letters));
  std::vector<Rel> rels;
  for (ElemId i = 1; i < m.card(); ++i) {
    for (ElemId j = 1; j < m.card(); ++j) {
      const ElemId sum = m.add(i, j);
      assert(sum != 0 && "nonzero elements cannot cancel");
      rels.push_back({static_cast<Letter>(i - 1), static_cast<Letter>(j - 1),
                      static_cast<Letter>(sum - 1)});
    }
  }
  return Presentation(std::move(alphabet), std::move(rels));
}

ElemId eval_word(const FiniteMvs& m, const std::vector<ElemId>& assignment, const Word& w) {
  if (assignment.size() != w.alphabet()->size()) {
    throw DomainMismatch("assignment covers " + std::to_string(assignment.size()) +
                         " letters; alphabet has " + std::to_string(w.alphabet()->size()));
  }
  for (ElemId e : assignment) {
    if (e >= m.card()) {
      throw DomainMismatch("assigned element out of range");
    }
  }
  ElemId val = 0;
  for (Letter l : w.ids()) {
    val = m.add(val, assignment[l]);
  }
  return val;
}

RepresentationCheck verify_representation(const FiniteMvs& m, std::size_t bound,
                                          std::uint64_t node_budget) {
  const Presentation p = present_mvs(m);
  const BoundedCongruence bc = close(p, bound, node_budget);

  RepresentationCheck out;
  out.elem_class.assign(m.card(), 0);
  out.elem_class[0] = bc.class_of(Word::empty(p.alphabet_ptr()));
  for (ElemId i = 1; i < m.card(); ++i) {
    out.elem_class[i] = bc.class_of(p.word_from_ids({static_cast<Letter>(i - 1)}));
  }

  for (ElemId i = 0; i < m.card(); ++i) {
    for (ElemId j = 0; j < i; ++j) {
      if (out.elem_class[i] == out.elem_class[j]) {
        out.failure = "elements " + m.name(j) + " and " + m.name(i) +
                      " fall into the same class";
        return out;
      }
    }
  }
  if (bc.class_count() != m.card()) {
    for (std::size_t cls = 0; cls < bc.class_count(); ++cls) {
      const Word rep = bc.representative(cls);
      if (rep.length() > 1) {
        out.failure = "word " + rep.str() + " does not collapse to an element";
        return out;
      }
    }
    out.failure = "class count differs from the carrier size";
    return out;
  }
  for (ElemId i = 0; i < m.card(); ++i) {
    for (ElemId j = 0; j < m.card(); ++j) {
      const Word wi = i == 0 ? Word::empty(p.alphabet_ptr())
                             : p.word_from_ids({static_cast<Letter>(i - 1)});
      const Word wj = j == 0 ? Word::empty(p.alphabet_ptr())
                             : p.word_from_ids({static_cast<Letter>(j - 1)});
      if (bc.class_of(concat(wi, wj)) != out.elem_class[m.add(i, j)]) {
        out.failure = "product of " + m.name(i) + " and " + m.name(j) +
                      " lands in the wrong class";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

} // namespace mvs
