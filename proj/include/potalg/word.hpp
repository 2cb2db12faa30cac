#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace potalg {

using Letter = std::uint8_t;

/// A monomial of the free algebra K<x1,...,xn>: a sequence of generator
/// indices in 1..n. The empty word is the unit monomial.
///
/// Letters live inline (no allocation); unused slots are kept zero so that
/// equality and hashing can look at the raw bytes.
class Word {
public:
    static constexpr std::size_t kMaxDegree = 31;

    Word() = default;
    Word(std::initializer_list<int> letters);
    explicit Word(std::span<const Letter> letters);

    static Word letter(int index);

    std::size_t degree() const { return size_; }
    bool empty() const { return size_ == 0; }

    Letter operator[](std::size_t i) const { return letters_[i]; }
    const Letter* begin() const { return letters_.data(); }
    const Letter* end() const { return letters_.data() + size_; }
    std::span<const Letter> letters() const { return {letters_.data(), size_}; }

    void push_back(Letter l);
    void pop_back() { letters_[--size_] = 0; }

    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(size_ - len, len); }
    /// Rotation moving the first `shift` letters to the back.
    Word rotated(std::size_t shift) const;
    /// Smallest period p such that rotating by p gives the same word.
    std::size_t period() const;
    Letter max_letter() const;

    /// "x1*x2^3" style; the unit word prints as "1".
    std::string to_string() const;

    friend Word operator*(const Word& a, const Word& b);

    friend bool operator==(const Word& a, const Word& b) {
        return a.size_ == b.size_ && a.letters_ == b.letters_;
    }
    /// Degree-lexicographic: shorter words are smaller; equal lengths compare
    /// left to right with the higher generator index larger.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

    std::size_t hash() const;

private:
    std::array<Letter, kMaxDegree> letters_{};
    std::uint8_t size_ = 0;
};

inline std::strong_ordering word_compare(const Word& u, const Word& v) { return u <=> v; }

/// Index of a degree-d word among all n^d words of that degree, counting in
/// deglex order from 0.
std::size_t word_rank(const Word& w, int n);
Word word_from_rank(std::size_t rank, int n, std::size_t degree);

}  // namespace potalg

template <>
struct std::hash<potalg::Word> {
    std::size_t operator()(const potalg::Word& w) const noexcept { return w.hash(); }
};
