#include "potalg/word.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string_view>

namespace potalg {

namespace {

void check_letter(int index) {
    if (index < 1 || index > 255)
        throw std::invalid_argument("generator index out of range: " + std::to_string(index));
}

}  // namespace

Word::Word(std::initializer_list<int> letters) {
    for (int l : letters) {
        check_letter(l);
        push_back(static_cast<Letter>(l));
    }
}

Word::Word(std::span<const Letter> letters) {
    if (letters.size() > kMaxDegree)
        throw std::length_error("word exceeds maximal degree");
    for (Letter l : letters) {
        check_letter(l);
        letters_[size_++] = l;
    }
}

Word Word::letter(int index) {
    check_letter(index);
    Word w;
    w.push_back(static_cast<Letter>(index));
    return w;
}

void Word::push_back(Letter l) {
    if (size_ == kMaxDegree)
        throw std::length_error("word exceeds maximal degree");
    letters_[size_++] = l;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    Word w;
    std::copy_n(letters_.begin() + pos, len, w.letters_.begin());
    w.size_ = static_cast<std::uint8_t>(len);
    return w;
}

Word Word::rotated(std::size_t shift) const {
    if (size_ == 0)
        return *this;
    shift %= size_;
    Word w;
    w.size_ = size_;
    std::copy(begin() + shift, end(), w.letters_.begin());
    std::copy(begin(), begin() + shift, w.letters_.begin() + (size_ - shift));
    return w;
}

std::size_t Word::period() const {
    for (std::size_t p = 1; p < size_; ++p) {
        if (size_ % p == 0 && rotated(p) == *this)
            return p;
    }
    return size_;
}

Letter Word::max_letter() const {
    Letter m = 0;
    for (Letter l : *this)
        m = std::max(m, l);
    return m;
}

std::string Word::to_string() const {
    if (size_ == 0)
        return "1";
    std::string out;
    for (std::size_t i = 0; i < size_;) {
        std::size_t j = i;
        while (j < size_ && letters_[j] == letters_[i])
            ++j;
        if (!out.empty())
            out += '*';
        out += 'x';
        out += std::to_string(letters_[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

Word operator*(const Word& a, const Word& b) {
    if (a.size_ + b.size_ > Word::kMaxDegree)
        throw std::length_error("word exceeds maximal degree");
    Word w = a;
    std::copy(b.begin(), b.end(), w.letters_.begin() + a.size_);
    w.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
    return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size_ != b.size_)
        return a.size_ <=> b.size_;
    int c = std::memcmp(a.letters_.data(), b.letters_.data(), a.size_);
    return c <=> 0;
}

std::size_t Word::hash() const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(letters_.data()), size_));
}

std::size_t word_rank(const Word& w, int n) {
    std::size_t r = 0;
    for (Letter l : w)
        r = r * static_cast<std::size_t>(n) + (l - 1);
    return r;
}

Word word_from_rank(std::size_t rank, int n, std::size_t degree) {
    std::array<Letter, Word::kMaxDegree> buf{};
    for (std::size_t i = degree; i-- > 0;) {
        buf[i] = static_cast<Letter>(rank % static_cast<std::size_t>(n) + 1);
        rank /= static_cast<std::size_t>(n);
    }
    return Word(std::span<const Letter>(buf.data(), degree));
}

}  // namespace potalg
