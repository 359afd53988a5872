// words.hpp -- presentations by generators and length-reducing relations,
// bounded congruence closure, separating monoid models, and the
// presentation of a finite value set by its own elements

#ifndef MVS_WORDS_HPP
#define MVS_WORDS_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvs/algebra.hpp"

namespace mvs {

using Letter = std::uint8_t;

/// An ordered list of distinct letter names.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const { return letters_.size(); }
  const std::string& letter(Letter i) const { return letters_[i]; }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<Letter> id_of(std::string_view name) const;
  bool all_single_char() const;

  bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

private:
  std::vector<std::string> letters_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A finite word over a fixed alphabet. The empty word is the monoid
/// identity and prints as "0".
class Word {
public:
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);

  static Word empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), {}); }

  std::size_t length() const { return ids_.size(); }
  const std::vector<Letter>& ids() const { return ids_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  bool same_alphabet(const Word& other) const { return *alphabet_ == *other.alphabet_; }

  /// Letter names concatenated when all are single characters, else
  /// comma-separated; "0" for the empty word.
  std::string str() const;

  bool operator==(const Word& other) const {
    return ids_ == other.ids_ && same_alphabet(other);
  }

private:
  AlphabetPtr alphabet_;
  std::vector<Letter> ids_;
};

/// Juxtaposition; both words must share an alphabet, else AlphabetMismatch.
Word concat(const Word& u, const Word& v);

/// One defining relation: the two-letter word ab may be replaced by the
/// single letter c and vice versa.
struct Rel {
  Letter a;
  Letter b;
  Letter c;

  auto operator<=>(const Rel&) const = default;
};

/// An alphabet with a set of defining relations.
class Presentation {
public:
  Presentation(std::vector<std::string> letters,
               std::vector<std::array<std::string, 3>> relations);
  Presentation(AlphabetPtr alphabet, std::vector<Rel> relations);

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const std::vector<Rel>& relations() const { return rels_; }

  Word word_from_ids(std::vector<Letter> ids) const;

  /// Parses the command-line notation: letters concatenated when the whole
  /// alphabet is single characters, else comma-separated; "0" is the empty
  /// word unless 0 names a letter.
  Word parse_word(std::string_view text) const;

private:
  AlphabetPtr alphabet_;
  std::vector<Rel> rels_;
};

/// Whether u equals v or v results from u by applying rel at one position,
/// in either direction. Words must share an alphabet.
bool one_step(const Word& u, const Word& v, Rel rel);

inline constexpr std::uint64_t kDefaultWordBudget = std::uint64_t{1} << 20;

/// The partition of all words of length <= bound into connected components
/// of the one-step graph. Classes are numbered by their smallest member in
/// length-then-lexicographic order.
///
/// A class is exact when every one-step neighbour of every member stays
/// within the bound; an exact class is the complete congruence class.
class BoundedCongruence {
public:
  struct Chain {
    std::vector<Word> words;
    std::vector<Rel> via; // via[i] justifies words[i] -> words[i+1]
  };

  const Presentation& presentation() const { return pres_; }
  std::size_t bound() const { return bound_; }
  std::size_t word_count() const { return word_count_; }
  std::size_t class_count() const { return class_reps_.size(); }

  std::size_t class_of(const Word& w) const;
  bool same_class(const Word& u, const Word& v) const;

  bool exact(std::size_t cls) const { return exact_[cls] != 0; }
  Word representative(std::size_t cls) const;
  std::vector<Word> members(std::size_t cls) const;

  /// Shortest one-step chain between two equivalent words (breadth-first,
  /// deterministic neighbour order).
  Chain chain(const Word& u, const Word& v) const;

  // Rank helpers; words of length <= bound are numbered in
  // length-then-lexicographic order starting from the empty word.
  std::size_t encode(const Word& w) const;
  Word decode(std::size_t word_id) const;
  std::size_t class_of_id(std::size_t word_id) const { return class_ids_[word_id]; }

private:
  friend BoundedCongruence close(const Presentation&, std::size_t, std::uint64_t);
  explicit BoundedCongruence(Presentation p) : pres_(std::move(p)) {}

  std::vector<Letter> decode_ids(std::size_t word_id) const;
  std::size_t rank_ids(const std::vector<Letter>& w) const;
  // (neighbour id, index into relations()) in deterministic order
  std::vector<std::pair<std::uint32_t, std::uint32_t>>
  neighbours_of(const std::vector<Letter>& w) const;

  Presentation pres_;
  std::size_t bound_ = 0;
  std::size_t word_count_ = 0;
  std::vector<std::size_t> offsets_;     // first id of each length block
  std::vector<std::uint32_t> class_ids_; // word id -> class
  std::vector<std::uint32_t> class_reps_; // class -> smallest word id
  std::vector<char> exact_;
};

/// Closes the one-step relation over all words of length <= bound.
/// Requires bound >= 2 (BoundTooSmall); the universe must fit the budget
/// (SizeExceeded).
BoundedCongruence close(const Presentation& p, std::size_t bound,
                        std::uint64_t node_budget = kDefaultWordBudget);

enum class TriKind { Proved, Refuted, Unknown };

/// Bounded equality test. Proved comes with a replayable chain; Refuted
/// relies on one side's class being exact (hence complete), so the other
/// word can never reach it.
struct WordsEqual {
  TriKind kind = TriKind::Unknown;
  std::optional<BoundedCongruence::Chain> chain; // Proved
  std::optional<Word> exact_side;                // Refuted
};

WordsEqual words_equal(const Presentation& p, const Word& u, const Word& v, std::size_t bound,
                       std::uint64_t node_budget = kDefaultWordBudget);

/// A finite monoid (identity at index 0) with a letter assignment that
/// satisfies every defining relation. Evaluation is invariant on
/// congruence classes, so distinct values refute equality at any bound.
struct MonoidModel {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> assignment; // letter -> element

  std::size_t eval(const Word& w) const;
  bool satisfies(const Presentation& p) const;
};

/// Enumerates monoids by size, tables and assignments lexicographically,
/// and returns the first model separating u from v; nothing when max_size
/// is 0 or no model of admissible size separates them.
std::optional<MonoidModel> find_separating_model(const Presentation& p, const Word& u,
                                                 const Word& v, std::size_t max_size);

/// Bounded check of the common-divisor condition on the quotient monoid:
/// for distinct letters a, b a letter c must divide both classes. A pair
/// is conclusively refuted only when both classes are exact.
struct M4Check {
  TriKind kind = TriKind::Unknown;
  std::vector<std::array<Letter, 3>> witnesses;      // Proved: (a, b, common c)
  std::optional<std::array<Letter, 2>> failing_pair; // Refuted
  std::optional<std::array<Letter, 2>> undecided_pair; // Unknown
};

M4Check check_m4(const Presentation& p, std::size_t bound,
                 std::uint64_t node_budget = kDefaultWordBudget);

/// The presentation whose letters are the nonzero elements of m and whose
/// relations list the full addition table.
Presentation present_mvs(const FiniteMvs& m);

/// Left fold of the assigned values; the empty word evaluates to 0.
ElemId eval_word(const FiniteMvs& m, const std::vector<ElemId>& assignment, const Word& w);

/// Outcome of replaying the representation of m by present_mvs(m): every
/// bounded word must collapse to a length <= 1 word, the length <= 1
/// classes must be pairwise distinct, and concatenation of representatives
/// must match the addition table.
struct RepresentationCheck {
  bool ok = false;
  std::string failure;
  std::vector<std::size_t> elem_class; // element -> class in the closure
};

RepresentationCheck verify_representation(const FiniteMvs& m, std::size_t bound,
                                          std::uint64_t node_budget = kDefaultWordBudget);

} // namespace mvs

#endif // MVS_WORDS_HPP
