#include "wordmom/word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wordmom {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter)
        out.pop_back();
    else
        out.push_back(letter);
}

}  // namespace

Word::Word(std::vector<int> letters) {
    for (int l : letters) {
        if (l == 0) throw std::invalid_argument("word letters must be nonzero");
        push_reduced(letters_, l);
    }
}

int Word::rank() const {
    int r = 0;
    for (int l : letters_) r = std::max(r, std::abs(l));
    return r;
}

Word Word::inverse() const {
    std::vector<int> rev(letters_.rbegin(), letters_.rend());
    for (int& l : rev) l = -l;
    Word w;
    w.letters_ = std::move(rev);  // reversal of a reduced word stays reduced
    return w;
}

Word Word::power(int k) const {
    if (k < 0) throw std::invalid_argument("Word::power: negative exponent");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(k) * letters_.size());
    for (int i = 0; i < k; ++i)
        for (int l : letters_) push_reduced(out, l);
    return Word(std::move(out));
}

Word Word::operator*(const Word& other) const {
    std::vector<int> out = letters_;
    for (int l : other.letters_) push_reduced(out, l);
    Word w;
    w.letters_ = std::move(out);
    return w;
}

namespace {

// x,y,z are generators 1,2,3; the remaining letters a..w are 4..26.
int letter_index(char lower) {
    if (lower == 'x') return 1;
    if (lower == 'y') return 2;
    if (lower == 'z') return 3;
    return lower - 'a' + 4;
}

char index_letter(int idx) {
    if (idx == 1) return 'x';
    if (idx == 2) return 'y';
    if (idx == 3) return 'z';
    return static_cast<char>('a' + idx - 4);
}

}  // namespace

std::string Word::display() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (int l : letters_) {
        int idx = std::abs(l);
        if (idx <= 26) {
            char c = index_letter(idx);
            os << (l > 0 ? c : static_cast<char>(std::toupper(c)));
        } else {
            os << (l > 0 ? 'x' : 'X') << idx;
        }
    }
    return os.str();
}

std::string Word::to_json() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ',';
        os << letters_[i];
    }
    os << ']';
    return os.str();
}

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    Word parse() {
        Word w = parse_sequence();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return w;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("word syntax error at position " +
                                    std::to_string(pos_) + ": " + msg);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    char peek() {
        skip_space();
        return text_[pos_];
    }

    // One or more factors; stops at ',' or ']' or end of input.
    Word parse_sequence() {
        Word w;
        bool any = false;
        while (!at_end()) {
            char c = peek();
            if (c == ',' || c == ']') break;
            w = w * parse_factor();
            any = true;
        }
        if (!any) fail("expected a word");
        return w;
    }

    Word parse_factor() {
        Word atom = parse_atom();
        if (!at_end() && peek() == '^') {
            ++pos_;
            long k = parse_int();
            if (k < 0) return atom.inverse().power(static_cast<int>(-k));
            return atom.power(static_cast<int>(k));
        }
        return atom;
    }

    Word parse_atom() {
        char c = peek();
        if (c == '[') {
            ++pos_;
            Word u = parse_sequence();
            if (at_end() || peek() != ',') fail("expected ',' in commutator");
            ++pos_;
            Word v = parse_sequence();
            if (at_end() || peek() != ']') fail("expected ']' in commutator");
            ++pos_;
            return u * v * u.inverse() * v.inverse();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            bool inv = std::isupper(static_cast<unsigned char>(c));
            char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            int idx;
            if (lower == 'x' && pos_ < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = static_cast<int>(parse_digits());
                if (idx == 0) fail("generator index must be positive");
            } else {
                idx = letter_index(lower);
            }
            return Word({inv ? -idx : idx});
        }
        fail("expected generator, 'xN' or '['");
    }

    long parse_int() {
        skip_space();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        long v = parse_digits();
        return neg ? -v : v;
    }

    long parse_digits() {
        skip_space();
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected digits");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) fail("number too large");
            ++pos_;
        }
        return v;
    }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text) {
    return Parser(text).parse();
}

Word cyclic_reduce(const Word& w) {
    std::vector<int> v = w.letters();
    size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == -v[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(std::vector<int>(v.begin() + lo, v.begin() + hi));
}

Word cyclic_rotate(const Word& w, int k) {
    int n = w.length();
    if (n == 0) return w;
    k = ((k % n) + n) % n;
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(w.letter((k + i) % n));
    return Word(std::move(out));
}

PowerDecomposition power_decomposition(const Word& w) {
    if (w.empty()) throw std::invalid_argument("power_decomposition: empty word");
    if (!(cyclic_reduce(w) == w))
        throw std::invalid_argument("power_decomposition: word not cyclically reduced");
    int n = w.length();
    for (int period = 1; period <= n; ++period) {
        if (n % period != 0) continue;
        bool ok = true;
        for (int i = period; i < n && ok; ++i)
            if (w.letter(i) != w.letter(i % period)) ok = false;
        if (ok) {
            std::vector<int> base(w.letters().begin(), w.letters().begin() + period);
            return PowerDecomposition{Word(std::move(base)), n / period};
        }
    }
    return PowerDecomposition{w, 1};  // unreachable: period = n always matches
}

Word concatenate_fresh(const Word& w1, const Word& w2) {
    int shift = w1.rank();
    std::vector<int> out = w1.letters();
    for (int l : w2.letters()) out.push_back(l > 0 ? l + shift : l - shift);
    return Word(std::move(out));
}

}  // namespace wordmom
