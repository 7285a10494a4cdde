#pragma once

// Words, codes and elementary operations in the Hamming graph H(n,q).

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hampack {

class SpaceMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpaceParams {
    int n = 1;
    int q = 2;

    static constexpr int max_binary_length = 64;
    static constexpr int max_alphabet = 10;

    SpaceParams() = default;
    SpaceParams(int length, int alphabet);

    bool binary() const { return q == 2; }
    /// Number of vertices q^n; throws if it does not fit in 64 bits.
    std::uint64_t volume() const;

    friend bool operator==(const SpaceParams &, const SpaceParams &) = default;
};

std::string to_string(const SpaceParams &s);

/// A word of H(n,q). Binary words are bit-packed (coordinate i is bit i);
/// q-ary words hold one byte per symbol.
class Word {
public:
    Word() = default;
    /// The all-zero word.
    explicit Word(SpaceParams space);
    Word(SpaceParams space, std::span<const int> symbols);
    static Word from_bits(int n, std::uint64_t bits);
    static Word parse(SpaceParams space, std::string_view digits);

    const SpaceParams &space() const { return space_; }
    int length() const { return space_.n; }

    int operator[](int i) const
    {
        return space_.q == 2 ? static_cast<int>((bits_ >> i) & 1u) : digits_[i];
    }
    Word with(int i, int symbol) const;

    /// Packed representation; only meaningful for q = 2.
    std::uint64_t bits() const { return bits_; }
    int parity() const;
    std::string str() const;

    friend bool operator==(const Word &a, const Word &b)
    {
        return a.space_ == b.space_ && a.bits_ == b.bits_ && a.digits_ == b.digits_;
    }
    /// Lexicographic on the symbol sequence.
    friend std::strong_ordering operator<=>(const Word &a, const Word &b);

private:
    SpaceParams space_;
    std::uint64_t bits_ = 0;
    std::vector<std::uint8_t> digits_;
};

std::ostream &operator<<(std::ostream &os, const Word &w);

int hamming_distance(const Word &x, const Word &y);
int weight(const Word &x);

/// Coordinatewise sum modulo q.
Word add(const Word &x, const Word &y);
/// x + all-one word, binary only.
Word antipode(const Word &x);
Word all_one(int n);

/// |B_r| = sum_{i<=r} C(n,i)(q-1)^i, saturating at UINT64_MAX.
std::uint64_t ball_size(SpaceParams space, int r);

/// Calls visit(w) once for every word at distance <= r from center.
void for_each_in_ball(const Word &center, int r, const std::function<void(const Word &)> &visit);
std::vector<Word> ball(const Word &center, int r);

/// The vertex with the given rank in lexicographic order.
Word vertex_at(SpaceParams space, std::uint64_t index);

/// Calls visit(w) for every vertex of H(n,q) in lexicographic order.
void for_each_vertex(SpaceParams space, const std::function<void(const Word &)> &visit);

/// A finite multiset of words of one space, kept in lexicographic order.
class Code {
public:
    explicit Code(SpaceParams space = {}) : space_(space) {}
    Code(SpaceParams space, std::vector<Word> words);

    const SpaceParams &space() const { return space_; }
    int length() const { return space_.n; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const std::vector<Word> &words() const { return words_; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }
    const Word &operator[](std::size_t i) const { return words_[i]; }

    std::size_t count(const Word &w) const;
    bool contains(const Word &w) const { return count(w) > 0; }
    /// Words occurring more than once, each listed once.
    std::vector<Word> duplicates() const;
    /// Same words with multiplicities collapsed.
    Code distinct() const;
    bool is_set() const { return duplicates().empty(); }

    Code translate(const Word &v) const;
    Code united(const Code &other) const;

    friend bool operator==(const Code &, const Code &) = default;

private:
    SpaceParams space_;
    std::vector<Word> words_;
};

/// Number of codewords (with multiplicity) within distance r of v.
std::size_t coverage_multiplicity(const Code &c, const Word &v, int r);

/// Text format: first line "q n", then one digit string per word.
/// Blank lines and lines starting with '#' are ignored.
Code read_code(std::istream &in);
void write_code(std::ostream &out, const Code &c);
Code read_code_file(const std::string &path);
void write_code_file(const std::string &path, const Code &c);

}  // namespace hampack
