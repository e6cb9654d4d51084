#include "glws/json_io.hpp"

namespace glws {

Json permutation_to_json(const Permutation& sigma) {
    return Json{{"k", sigma.size()}, {"images", sigma.images()}};
}

Permutation permutation_from_json(const Json& j) {
    std::vector<int> images = j.at("images").get<std::vector<int>>();
    if (j.contains("k") && j.at("k").get<int>() != static_cast<int>(images.size()))
        throw std::invalid_argument("permutation JSON: k does not match images");
    return Permutation::from_images(images);
}

Json chord_diagram_to_json(const ChordDiagram& d) {
    Json pairs = Json::array();
    for (const auto& [a, b] : d.pairs()) pairs.push_back(Json::array({a, b}));
    return Json{{"n", d.chord_count()}, {"pairs", pairs}};
}

ChordDiagram chord_diagram_from_json(const Json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("pairs")) pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(pairs.size()))
        throw std::invalid_argument("chord diagram JSON: n does not match pairs");
    return ChordDiagram::from_pairs(std::move(pairs));
}

Json polynomial_to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::array();
        for (const auto& [var, exp] : m.powers()) mono.push_back(Json::array({var, exp}));
        out.push_back(Json{{"coeff_num", to_int64(c.get_num())},
                           {"coeff_den", to_int64(c.get_den())},
                           {"monomial", mono}});
    }
    return out;
}

Polynomial polynomial_from_json(const Json& j) {
    Polynomial p;
    for (const auto& term : j) {
        Rational c = make_rational(term.at("coeff_num").get<long>(),
                                   term.at("coeff_den").get<long>());
        Monomial::Powers powers;
        for (const auto& ve : term.at("monomial"))
            powers.push_back({ve.at(0).get<int>(), ve.at(1).get<int>()});
        p += Polynomial::term(Monomial::from_powers(std::move(powers)), c);
    }
    return p;
}

Json sign_function_to_json(const SignFunction& f) {
    Json linear = Json::array();
    for (int v : f.linear()) linear.push_back(v + 1);
    Json quadratic = Json::array();
    for (const auto& [a, b] : f.quadratic()) quadratic.push_back(Json::array({a + 1, b + 1}));
    return Json{{"linear", linear}, {"quadratic", quadratic}};
}

Json uea_element_to_json(const UEAElement& x) {
    const int d = x.signature().dimension();
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json mono = Json::array();
        for (const auto& [g, exp] : m.powers())
            mono.push_back(Json::array({gen_row(g, d) + 1, gen_col(g, d) + 1, exp}));
        terms.push_back(Json{{"coeff_num", to_int64(c.get_num())},
                             {"coeff_den", to_int64(c.get_den())},
                             {"monomial", mono}});
    }
    return Json{{"m", x.signature().m}, {"n", x.signature().n}, {"terms", terms}};
}

}  // namespace glws
