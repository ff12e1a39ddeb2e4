#pragma once

// Parser for the word text syntax shared by all CLI surfaces:
// whitespace-separated tokens `g^k` (g a generator name, k an optional
// nonzero integer exponent), bracket syntax `[u,v]` (nested, multi-argument
// brackets are left-normed commutators), and the `V(r,s;x,y)` macro used by
// presentation files.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "word.hpp"

namespace cgtk {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

namespace detail {

class WordParser {
public:
    WordParser(std::string_view text, const std::vector<std::string>& names, bool allowVMacro)
        : text_(text), names_(names), vmacro_(allowVMacro) {}

    Word parse() {
        Word w = parseProduct();
        skipSpace();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return w;
    }

private:
    std::string_view text_;
    const std::vector<std::string>& names_;
    bool vmacro_;
    size_t pos_ = 0;

    int rank() const { return static_cast<int>(names_.size()); }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool atFactorEnd() {
        skipSpace();
        return pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ']';
    }

    Word parseProduct() {
        Word w(rank());
        while (!atFactorEnd()) w.append(parseFactor());
        return w;
    }

    Word parseFactor() {
        skipSpace();
        if (pos_ >= text_.size()) throw ParseError("expected a factor", pos_);
        Word base(rank());
        if (text_[pos_] == '[') {
            ++pos_;
            std::vector<Word> args;
            args.push_back(parseProduct());
            skipSpace();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                args.push_back(parseProduct());
                skipSpace();
            }
            if (pos_ >= text_.size() || text_[pos_] != ']')
                throw ParseError("expected ']'", pos_);
            ++pos_;
            if (args.size() < 2) throw ParseError("bracket needs at least two arguments", pos_);
            base = commutator(args);
        } else if (vmacro_ && matchVMacro(base)) {
            // handled inside matchVMacro
        } else {
            base = parseGenerator();
        }
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            std::int64_t e = parseInt();
            if (e == 0) throw ParseError("exponent 0 is not allowed", pos_);
            base = base.pow(e);
        }
        return base;
    }

    // V(r,s;x,y) expands to prod_{j=1..s} x * y^{s*r + j}.
    bool matchVMacro(Word& out) {
        skipSpace();
        if (text_.compare(pos_, 2, "V(") != 0) return false;
        size_t save = pos_;
        pos_ += 2;
        std::int64_t r = parseInt();
        expect(',');
        std::int64_t s = parseInt();
        expect(';');
        Word x = parseGenerator();
        expect(',');
        Word y = parseGenerator();
        expect(')');
        if (s < 1) throw ParseError("V macro needs scale >= 1", save);
        Word w(rank());
        for (std::int64_t j = 1; j <= s; ++j) {
            w.append(x);
            w.append(y.pow(s * r + j));
        }
        out = w;
        return true;
    }

    void expect(char c) {
        skipSpace();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::int64_t parseInt() {
        skipSpace();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            throw ParseError("expected an integer", start);
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    Word parseGenerator() {
        skipSpace();
        size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ++pos_;
            else break;
        }
        if (pos_ == start) throw ParseError("expected a generator name", start);
        std::string name(text_.substr(start, pos_ - start));
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return generator(rank(), static_cast<int>(i) + 1);
        throw ParseError("unknown generator '" + name + "'", start);
    }
};

}  // namespace detail

inline Word parse_word(std::string_view text, const std::vector<std::string>& generatorNames,
                       bool allowVMacro = false) {
    return detail::WordParser(text, generatorNames, allowVMacro).parse();
}

// Default generator names x1..xm.
inline std::vector<std::string> default_names(int m) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

inline Word parse_word(std::string_view text, int rank) {
    return parse_word(text, default_names(rank));
}

}  // namespace cgtk
