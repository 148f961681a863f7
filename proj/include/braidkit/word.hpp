#ifndef BRAIDKIT_WORD_HPP
#define BRAIDKIT_WORD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace braidkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedWord : Error {
  using Error::Error;
};
struct NonInvertibleLetter : Error {
  explicit NonInvertibleLetter(const std::string& gen)
      : Error("inverse of noninvertible generator " + gen), generator(gen) {}
  std::string generator;
};
struct UnknownGenerator : Error {
  using Error::Error;
};
struct UnknownFamily : Error {
  using Error::Error;
};
struct UnsupportedParams : Error {
  using Error::Error;
};
struct MonoidPresentation : Error {
  using Error::Error;
};
struct RankMismatch : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};

struct Generator {
  std::string name;
  bool invertible = true;
  bool operator==(const Generator&) const = default;
};

/// Ordered set of named generators; words index into it.
class Alphabet {
 public:
  static std::shared_ptr<const Alphabet> make(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_.at(static_cast<size_t>(i)); }
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<int> index_of(std::string_view name) const;

  // Content equality; distinct builds of the same alphabet compare equal.
  bool same_as(const Alphabet& other) const { return gens_ == other.gens_; }

 private:
  explicit Alphabet(std::vector<Generator> gens);
  std::vector<Generator> gens_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

struct Letter {
  int gen = 0;
  std::int64_t exp = 1;
  bool operator==(const Letter&) const = default;
};

/// Signed word over one alphabet, run-length encoded by exponent.
class Word {
 public:
  Word(AlphabetRef alphabet, std::vector<Letter> letters);
  static Word empty(AlphabetRef alphabet) { return Word(std::move(alphabet), {}); }

  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_empty() const { return letters_.empty(); }

  // Total letter count with exponents unrolled.
  std::int64_t length() const;

  bool operator==(const Word& other) const;

 private:
  AlphabetRef alphabet_;
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word pow(const Word& w, std::int64_t k);

/// Homomorphism datum: each source generator maps to a target word.
struct GeneratorMap {
  AlphabetRef source;
  AlphabetRef target;
  std::vector<Word> images;  // one per source generator, reduced

  const Word& image_of(int gen) const { return images.at(static_cast<size_t>(gen)); }
};

Word substitute(const Word& w, const GeneratorMap& m);

/// `name` or `name^k` tokens separated by single spaces.
Word parse_word(const AlphabetRef& alphabet, std::string_view text);
std::string to_string(const Word& w);

}  // namespace braidkit

#endif
