#include "hypereq/rational.hpp"

#include <cctype>

#include "hypereq/errors.hpp"

namespace hypereq {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    // mpq_set_str accepts forms we do not want (whitespace, hex); vet first.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) throw ParseError("bad rational literal '" + std::string(text) + "'");
    if (num_end != text.size()) {
        if (text[num_end] != '/') throw ParseError("bad rational literal '" + std::string(text) + "'");
        std::size_t den_begin = num_end + 1;
        std::size_t den_end = digits(den_begin);
        if (den_end == den_begin || den_end != text.size())
            throw ParseError("bad rational literal '" + std::string(text) + "'");
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw ParseError("bad rational literal '" + std::string(text) + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

}  // namespace hypereq
