#include "cli/expr.hpp"

#include <charconv>

namespace ramsum::cli {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ArithFn parse_all() {
        ArithFn f = expr();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("cannot parse function '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                          ": " + why);
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string word() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') ++pos_;
        if (start == pos_) fail("expected a function name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t integer() {
        std::int64_t value = 0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    std::int64_t parameter() {
        expect(':');
        return integer();
    }

    ArithFn expr() {
        const std::string name = word();
        if (name == "mu" || name == "eps" || name == "one" || name == "phi") return fn::builtin(name);
        if (name == "pow" || name == "agamma") {
            const std::int64_t p = parameter();
            if (name == "agamma" && p < 1) fail("agamma needs gamma >= 1");
            const std::int64_t params[1] = {p};
            return fn::builtin(name, params);
        }
        if (name == "restrict") {
            const std::int64_t g = parameter();
            if (g < 1) fail("restrict needs gamma >= 1");
            expect('(');
            ArithFn inner = expr();
            expect(')');
            return restrict_gamma(inner, g);
        }
        if (name == "mul" || name == "dirichlet") {
            expect('(');
            ArithFn a = expr();
            expect(',');
            ArithFn b = expr();
            expect(')');
            return name == "mul" ? pointwise_mul(a, b) : dirichlet(a, b);
        }
        if (name == "gconv") {
            const std::int64_t g = parameter();
            if (g < 1) fail("gconv needs gamma >= 1");
            expect('(');
            ArithFn a = expr();
            expect(',');
            ArithFn b = expr();
            expect(')');
            return gamma_convolve(a, b, g);
        }
        fail("unknown function '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_top_level(std::string_view text) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (depth < 0) throw parse_error("unbalanced parentheses in '" + std::string(text) + "'");
        if (text[i] == ',' && depth == 0) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw parse_error("unbalanced parentheses in '" + std::string(text) + "'");
    parts.push_back(text.substr(start));
    return parts;
}

}  // namespace

ArithFn parse_fn(std::string_view text) { return Parser(text).parse_all(); }

std::vector<ArithFn> parse_fn_list(std::string_view text) {
    if (text.empty()) throw parse_error("empty function list");
    std::vector<ArithFn> out;
    for (auto part : split_top_level(text)) out.push_back(parse_fn(part));
    return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
            throw parse_error("not an integer list: '" + std::string(text) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace ramsum::cli
