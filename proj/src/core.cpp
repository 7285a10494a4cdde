#include "hampack/core.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace hampack {

SpaceParams::SpaceParams(int length, int alphabet) : n(length), q(alphabet)
{
    if (n < 1)
        throw std::invalid_argument("word length must be positive, got " + std::to_string(n));
    if (q < 2 || q > max_alphabet)
        throw std::invalid_argument("alphabet size must be in [2,10], got " + std::to_string(q));
    if (n > max_binary_length)
        throw std::invalid_argument("word length above 64 is not supported");
}

std::uint64_t SpaceParams::volume() const
{
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q))
            throw std::overflow_error("q^n does not fit in 64 bits for " + to_string(*this));
        v *= static_cast<std::uint64_t>(q);
    }
    return v;
}

std::string to_string(const SpaceParams &s)
{
    return "H(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
}

Word::Word(SpaceParams space) : space_(space)
{
    if (!space_.binary())
        digits_.assign(static_cast<std::size_t>(space_.n), 0);
}

Word::Word(SpaceParams space, std::span<const int> symbols) : Word(space)
{
    if (static_cast<int>(symbols.size()) != space.n)
        throw SpaceMismatch("word has " + std::to_string(symbols.size()) + " symbols, expected "
                            + std::to_string(space.n));
    for (int i = 0; i < space.n; ++i) {
        int s = symbols[static_cast<std::size_t>(i)];
        if (s < 0 || s >= space.q)
            throw SpaceMismatch("symbol " + std::to_string(s) + " outside alphabet of size "
                                + std::to_string(space.q));
        if (space.binary())
            bits_ |= static_cast<std::uint64_t>(s) << i;
        else
            digits_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s);
    }
}

Word Word::from_bits(int n, std::uint64_t bits)
{
    Word w{SpaceParams(n, 2)};
    if (n < 64 && (bits >> n) != 0)
        throw SpaceMismatch("bit pattern wider than word length " + std::to_string(n));
    w.bits_ = bits;
    return w;
}

Word Word::parse(SpaceParams space, std::string_view digits)
{
    if (static_cast<int>(digits.size()) != space.n)
        throw FormatError("word '" + std::string(digits) + "' has length " + std::to_string(digits.size())
                          + ", expected " + std::to_string(space.n));
    std::vector<int> symbols;
    symbols.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch - '0' >= space.q)
            throw FormatError("word '" + std::string(digits) + "' has a symbol outside 0.."
                              + std::to_string(space.q - 1));
        symbols.push_back(ch - '0');
    }
    return Word(space, symbols);
}

Word Word::with(int i, int symbol) const
{
    if (i < 0 || i >= space_.n)
        throw std::out_of_range("coordinate " + std::to_string(i) + " out of range");
    if (symbol < 0 || symbol >= space_.q)
        throw SpaceMismatch("symbol " + std::to_string(symbol) + " outside alphabet");
    Word w = *this;
    if (space_.binary())
        w.bits_ = (bits_ & ~(std::uint64_t{1} << i)) | (static_cast<std::uint64_t>(symbol) << i);
    else
        w.digits_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(symbol);
    return w;
}

int Word::parity() const
{
    if (space_.binary())
        return std::popcount(bits_) & 1;
    int s = 0;
    for (auto d : digits_)
        s += d;
    return s & 1;
}

std::string Word::str() const
{
    std::string s(static_cast<std::size_t>(space_.n), '0');
    for (int i = 0; i < space_.n; ++i)
        s[static_cast<std::size_t>(i)] = static_cast<char>('0' + (*this)[i]);
    return s;
}

std::strong_ordering operator<=>(const Word &a, const Word &b)
{
    if (auto c = a.space_.n <=> b.space_.n; c != 0)
        return c;
    if (auto c = a.space_.q <=> b.space_.q; c != 0)
        return c;
    if (a.space_.binary()) {
        std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0)
            return std::strong_ordering::equal;
        std::uint64_t first = diff & (~diff + 1);
        return (a.bits_ & first) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.digits_ <=> b.digits_;
}

std::ostream &operator<<(std::ostream &os, const Word &w) { return os << w.str(); }

namespace {

void require_same_space(const Word &x, const Word &y)
{
    if (!(x.space() == y.space()))
        throw SpaceMismatch("words from different spaces: " + to_string(x.space()) + " vs "
                            + to_string(y.space()));
}

}  // namespace

int hamming_distance(const Word &x, const Word &y)
{
    require_same_space(x, y);
    if (x.space().binary())
        return std::popcount(x.bits() ^ y.bits());
    int d = 0;
    for (int i = 0; i < x.length(); ++i)
        d += x[i] != y[i];
    return d;
}

int weight(const Word &x)
{
    if (x.space().binary())
        return std::popcount(x.bits());
    int w = 0;
    for (int i = 0; i < x.length(); ++i)
        w += x[i] != 0;
    return w;
}

Word add(const Word &x, const Word &y)
{
    require_same_space(x, y);
    if (x.space().binary())
        return Word::from_bits(x.length(), x.bits() ^ y.bits());
    std::vector<int> s(static_cast<std::size_t>(x.length()));
    for (int i = 0; i < x.length(); ++i)
        s[static_cast<std::size_t>(i)] = (x[i] + y[i]) % x.space().q;
    return Word(x.space(), s);
}

Word all_one(int n)
{
    return Word::from_bits(n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

Word antipode(const Word &x)
{
    if (!x.space().binary())
        throw SpaceMismatch("antipode is defined for binary words only");
    return add(x, all_one(x.length()));
}

std::uint64_t ball_size(SpaceParams space, int r)
{
    if (r < 0 || r > space.n)
        throw std::invalid_argument("ball radius " + std::to_string(r) + " outside [0,n]");
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 total = 0, binom = 1, pw = 1;
    for (int i = 0; i <= r; ++i) {
        if (pw > cap)
            return cap;
        total += binom * pw;
        if (total > cap)
            return cap;
        binom = binom * static_cast<unsigned>(space.n - i) / static_cast<unsigned>(i + 1);
        pw *= static_cast<unsigned>(space.q - 1);
    }
    return static_cast<std::uint64_t>(total);
}

namespace {

void ball_rec(const Word &center, Word &cur, int from, int budget,
              const std::function<void(const Word &)> &visit)
{
    visit(cur);
    if (budget == 0)
        return;
    const int q = center.space().q;
    for (int i = from; i < center.length(); ++i) {
        int orig = center[i];
        for (int s = 0; s < q; ++s) {
            if (s == orig)
                continue;
            Word next = cur.with(i, s);
            ball_rec(center, next, i + 1, budget - 1, visit);
        }
    }
}

}  // namespace

void for_each_in_ball(const Word &center, int r, const std::function<void(const Word &)> &visit)
{
    if (r < 0 || r > center.length())
        throw std::invalid_argument("ball radius " + std::to_string(r) + " outside [0,n]");
    Word cur = center;
    ball_rec(center, cur, 0, r, visit);
}

std::vector<Word> ball(const Word &center, int r)
{
    std::vector<Word> out;
    for_each_in_ball(center, r, [&](const Word &w) { out.push_back(w); });
    return out;
}

Word vertex_at(SpaceParams space, std::uint64_t index)
{
    if (space.binary()) {
        std::uint64_t bits = 0;
        for (int i = 0; i < space.n; ++i)
            bits |= ((index >> (space.n - 1 - i)) & 1u) << i;
        return Word::from_bits(space.n, bits);
    }
    std::vector<int> s(static_cast<std::size_t>(space.n), 0);
    for (int i = space.n - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(space.q));
        index /= static_cast<std::uint64_t>(space.q);
    }
    return Word(space, s);
}

void for_each_vertex(SpaceParams space, const std::function<void(const Word &)> &visit)
{
    const std::uint64_t total = space.volume();
    if (space.binary()) {
        for (std::uint64_t k = 0; k < total; ++k)
            visit(vertex_at(space, k));
        return;
    }
    std::vector<int> s(static_cast<std::size_t>(space.n), 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        visit(Word(space, s));
        for (int i = space.n - 1; i >= 0; --i) {
            auto &d = s[static_cast<std::size_t>(i)];
            if (++d < space.q)
                break;
            d = 0;
        }
    }
}

Code::Code(SpaceParams space, std::vector<Word> words) : space_(space), words_(std::move(words))
{
    for (const auto &w : words_)
        if (!(w.space() == space_))
            throw SpaceMismatch("word " + w.str() + " does not belong to " + to_string(space_));
    std::sort(words_.begin(), words_.end());
}

std::size_t Code::count(const Word &w) const
{
    auto [lo, hi] = std::equal_range(words_.begin(), words_.end(), w);
    return static_cast<std::size_t>(hi - lo);
}

std::vector<Word> Code::duplicates() const
{
    std::vector<Word> out;
    for (std::size_t i = 1; i < words_.size(); ++i)
        if (words_[i] == words_[i - 1] && (out.empty() || !(out.back() == words_[i])))
            out.push_back(words_[i]);
    return out;
}

Code Code::distinct() const
{
    std::vector<Word> w = words_;
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return Code(space_, std::move(w));
}

Code Code::translate(const Word &v) const
{
    std::vector<Word> w;
    w.reserve(words_.size());
    for (const auto &x : words_)
        w.push_back(add(x, v));
    return Code(space_, std::move(w));
}

Code Code::united(const Code &other) const
{
    if (!(other.space_ == space_))
        throw SpaceMismatch("cannot unite codes from different spaces");
    std::vector<Word> w = words_;
    w.insert(w.end(), other.words_.begin(), other.words_.end());
    return Code(space_, std::move(w));
}

std::size_t coverage_multiplicity(const Code &c, const Word &v, int r)
{
    if (!(c.space() == v.space()))
        throw SpaceMismatch("word " + v.str() + " is not in " + to_string(c.space()));
    std::size_t k = 0;
    for (const auto &x : c)
        k += hamming_distance(x, v) <= r;
    return k;
}

Code read_code(std::istream &in)
{
    std::string line;
    int lineno = 0;
    std::optional<SpaceParams> space;
    std::vector<Word> words;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::string_view body(line.data() + start, line.size() - start);
        if (!space) {
            std::istringstream hdr{std::string(body)};
            int q = 0, n = 0;
            std::string extra;
            if (!(hdr >> q >> n) || (hdr >> extra))
                throw FormatError("line " + std::to_string(lineno) + ": expected header 'q n'");
            try {
                space = SpaceParams(n, q);
            } catch (const std::invalid_argument &e) {
                throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
            }
            continue;
        }
        try {
            words.push_back(Word::parse(*space, body));
        } catch (const FormatError &e) {
            throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!space)
        return Code{};
    return Code(*space, std::move(words));
}

void write_code(std::ostream &out, const Code &c)
{
    out << c.space().q << ' ' << c.space().n << '\n';
    for (const auto &w : c)
        out << w.str() << '\n';
}

Code read_code_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_code(in);
}

void write_code_file(const std::string &path, const Code &c)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    write_code(out, c);
}

}  // namespace hampack
