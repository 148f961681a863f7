#include "braidkit/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace braidkit {

namespace {

bool valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '^') return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw MalformedWord("alphabet must have at least one generator");
  for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
    const auto& g = gens_[static_cast<size_t>(i)];
    if (!valid_generator_name(g.name))
      throw MalformedWord("invalid generator name '" + g.name + "'");
    if (!index_.emplace(g.name, i).second)
      throw MalformedWord("duplicate generator name '" + g.name + "'");
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<Generator> gens) {
  return std::shared_ptr<const Alphabet>(new Alphabet(std::move(gens)));
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word::Word(AlphabetRef alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw MalformedWord("word without alphabet");
  for (const auto& l : letters_) {
    if (l.gen < 0 || l.gen >= alphabet_->size())
      throw MalformedWord("letter refers to generator outside the alphabet");
    if (l.exp == 0) throw MalformedWord("zero exponent letter");
    if (l.exp < 0 && !alphabet_->gen(l.gen).invertible)
      throw MalformedWord("negative exponent on noninvertible generator " +
                          alphabet_->gen(l.gen).name);
  }
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& l : letters_) n += std::llabs(l.exp);
  return n;
}

bool Word::operator==(const Word& other) const {
  return alphabet_->same_as(*other.alphabet_) && letters_ == other.letters_;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    Letter cur = l;
    while (!out.empty() && out.back().gen == cur.gen) {
      cur.exp += out.back().exp;
      out.pop_back();
      if (cur.exp == 0) break;
    }
    if (cur.exp != 0) out.push_back(cur);
  }
  return Word(w.alphabet(), std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (!w.alphabet()->gen(it->gen).invertible)
      throw NonInvertibleLetter(w.alphabet()->gen(it->gen).name);
    out.push_back({it->gen, -it->exp});
  }
  return Word(w.alphabet(), std::move(out));
}

Word concat(const Word& u, const Word& v) {
  if (!u.alphabet()->same_as(*v.alphabet()))
    throw MalformedWord("concat of words over different alphabets");
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(out));
}

Word pow(const Word& w, std::int64_t k) {
  if (k == 0) return Word::empty(w.alphabet());
  Word base = k > 0 ? w : invert(w);
  std::vector<Letter> out;
  for (std::int64_t i = 0; i < std::llabs(k); ++i)
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  return free_reduce(Word(w.alphabet(), std::move(out)));
}

Word substitute(const Word& w, const GeneratorMap& m) {
  if (!w.alphabet()->same_as(*m.source))
    throw MalformedWord("substitute: word alphabet differs from map source");
  Word out = Word::empty(m.target);
  for (const auto& l : w.letters()) {
    out = concat(out, pow(m.image_of(l.gen), l.exp));
  }
  return free_reduce(out);
}

Word parse_word(const AlphabetRef& alphabet, std::string_view text) {
  std::vector<Letter> letters;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    std::int64_t exp = 1;
    std::string_view name = tok;
    if (size_t caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      std::string_view num = tok.substr(caret + 1);
      auto res = std::from_chars(num.data(), num.data() + num.size(), exp);
      if (res.ec != std::errc() || res.ptr != num.data() + num.size())
        throw MalformedWord("bad exponent in letter '" + std::string(tok) + "'");
      if (exp == 0) throw MalformedWord("zero exponent in letter '" + std::string(tok) + "'");
    }
    auto idx = alphabet->index_of(name);
    if (!idx) throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
    if (exp < 0 && !alphabet->gen(*idx).invertible) throw NonInvertibleLetter(std::string(name));
    letters.push_back({*idx, exp});
  }
  return Word(alphabet, std::move(letters));
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << w.alphabet()->gen(l.gen).name;
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

}  // namespace braidkit
