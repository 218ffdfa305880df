#include "rescurv/generators.hpp"

#include "rescurv/error.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace rescurv {

WeightedGraph path(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "P_n needs n >= 1");
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, std::nullopt});
    return WeightedGraph(n, edges);
}

WeightedGraph cycle(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "C_n needs n >= 3");
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, std::nullopt});
    return WeightedGraph(n, edges);
}

WeightedGraph complete(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "K_n needs n >= 1");
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, std::nullopt});
    return WeightedGraph(n, edges);
}

WeightedGraph star(std::size_t leaves) {
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, i, std::nullopt});
    return WeightedGraph(leaves + 1, edges);
}

WeightedGraph hypercube(std::size_t d) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "Q_d needs d >= 1");
    return ProductDescriptor(std::vector<WeightedGraph>(d, path(2))).graph();
}

namespace {

class ShorthandParser {
public:
    explicit ShorthandParser(std::string_view text) : text_(text) {}

    std::vector<WeightedGraph> parse() {
        std::vector<WeightedGraph> factors;
        term(factors);
        while (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X' || text_[pos_] == '*')) {
            ++pos_;
            term(factors);
        }
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return factors;
    }

private:
    void term(std::vector<WeightedGraph>& out) {
        if (pos_ >= text_.size()) fail("expected a factor");
        const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_++])));
        const std::size_t n = number();
        std::size_t power = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            power = number();
            if (power < 1) fail("power must be >= 1");
        }
        std::vector<WeightedGraph> unit;
        switch (kind) {
        case 'P': unit.push_back(path(n)); break;
        case 'C': unit.push_back(cycle(n)); break;
        case 'K': unit.push_back(complete(n)); break;
        case 'Q':
            if (n < 1) fail("Q_d needs d >= 1");
            unit.assign(n, path(2));
            break;
        default: fail(std::string("unknown factor kind '") + kind + "'");
        }
        for (std::size_t k = 0; k < power; ++k) out.insert(out.end(), unit.begin(), unit.end());
    }

    std::size_t number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ - start > 6) fail("number too large");
        return static_cast<std::size_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, "shorthand '" + std::string(text_) + "': " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ProductDescriptor parse_shorthand(std::string_view text) {
    return ProductDescriptor(ShorthandParser(text).parse());
}

bool looks_like_shorthand(std::string_view text) {
    if (text.empty()) return false;
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c != 'P' && c != 'C' && c != 'K' && c != 'Q') return false;
    for (char ch : text)
        if (ch == '.' || ch == '/') return false;
    return true;
}

} // namespace rescurv
