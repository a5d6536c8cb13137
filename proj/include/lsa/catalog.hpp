#pragma once

// The built-in algebra catalog: the 2- and 3-dimensional nilpotent
// left-symmetric (Novikov) algebras, the 24 four-dimensional non-Novikov
// families of the classification list, the two Novikov component families,
// and zero algebras.  Families carry symbolic coefficients in their
// parameters; instantiation binds exact rational (or rational-function)
// values and enforces the domain and radical constraints.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/scalar.hpp"

namespace lsa {

// Tiny coefficient expression over named parameters, evaluable over any
// scalar field (Q(i) values, or rational functions when a degeneration
// path binds parameters to functions of t).
class Coef {
public:
    Coef() : Coef(GaussRational(0)) {}
    Coef(int v) : Coef(GaussRational(v)) {}
    Coef(GaussRational v) : node_(std::make_shared<Node>()) {
        node_->op = Op::Const;
        node_->value = std::move(v);
    }

    static Coef param(std::string name) {
        Coef c;
        c.node_->op = Op::Param;
        c.node_->name = std::move(name);
        return c;
    }

    friend Coef operator+(const Coef& a, const Coef& b) { return combine(Op::Add, a, b); }
    friend Coef operator-(const Coef& a, const Coef& b) { return combine(Op::Sub, a, b); }
    friend Coef operator*(const Coef& a, const Coef& b) { return combine(Op::Mul, a, b); }
    Coef operator-() const { return Coef(GaussRational(0)) - *this; }

    template <class K>
    K eval(const std::map<std::string, K>& binds) const {
        return eval_node<K>(*node_, binds);
    }

    std::string str() const { return str_node(*node_); }

private:
    enum class Op { Const, Param, Add, Sub, Mul };
    struct Node {
        Op op = Op::Const;
        GaussRational value;
        std::string name;
        std::shared_ptr<Node> lhs, rhs;
    };

    static Coef combine(Op op, const Coef& a, const Coef& b) {
        Coef c;
        c.node_->op = op;
        c.node_->lhs = a.node_;
        c.node_->rhs = b.node_;
        return c;
    }

    template <class K>
    static K eval_node(const Node& n, const std::map<std::string, K>& binds) {
        switch (n.op) {
            case Op::Const: return K(n.value);
            case Op::Param: {
                auto it = binds.find(n.name);
                if (it == binds.end()) throw Error("unbound parameter: " + n.name);
                return it->second;
            }
            case Op::Add: return eval_node<K>(*n.lhs, binds) + eval_node<K>(*n.rhs, binds);
            case Op::Sub: return eval_node<K>(*n.lhs, binds) - eval_node<K>(*n.rhs, binds);
            case Op::Mul: return eval_node<K>(*n.lhs, binds) * eval_node<K>(*n.rhs, binds);
        }
        throw Error("corrupt coefficient expression");
    }

    static std::string str_node(const Node& n) {
        switch (n.op) {
            case Op::Const: return to_string(n.value);
            case Op::Param: return n.name;
            case Op::Add: return str_node(*n.lhs) + "+" + str_node(*n.rhs);
            case Op::Sub:
                if (n.lhs->op == Op::Const && n.lhs->value.is_zero())
                    return "-" + wrap(*n.rhs, true);
                return str_node(*n.lhs) + "-" + wrap(*n.rhs, true);
            case Op::Mul: return wrap(*n.lhs, false) + "*" + wrap(*n.rhs, false);
        }
        return {};
    }

    static std::string wrap(const Node& n, bool sums_only) {
        bool need = n.op == Op::Add || n.op == Op::Sub ||
                    (!sums_only && n.op == Op::Const &&
                     to_string(n.value).find_first_of("+-") != std::string::npos);
        return need ? "(" + str_node(n) + ")" : str_node(n);
    }

    std::shared_ptr<Node> node_ = std::make_shared<Node>();
};

using ParamMap = std::map<std::string, GaussRational>;

struct ProductTerm {
    std::size_t i, j, k;  // 1-based, matching the product tables
    Coef coef;
};

enum class EntryKind {
    Zero,              // zero algebra of some dimension
    NovikovBase,       // the 2- and 3-dimensional catalog (all Novikov)
    NonNovikov,        // the 24 four-dimensional non-Novikov families
    NovikovComponent,  // component families of the 4-dim Novikov variety
};

struct CatalogEntry {
    std::string label;
    std::size_t dim = 0;
    std::vector<std::string> params;
    std::vector<ProductTerm> products;
    std::vector<std::pair<std::string, GaussRational>> excluded_values;  // param != value
    bool radical = false;  // requires mu^2 = 1 - 4*lambda
    std::vector<ParamMap> default_samples;
    std::string provenance;
    EntryKind kind = EntryKind::Zero;

    bool parametric() const { return !params.empty(); }
};

const std::vector<CatalogEntry>& catalog();

inline std::string normalize_label(std::string s) {
    for (char& c : s)
        if (c == '*') c = 's';
    return s;
}

inline const CatalogEntry* find_entry(const std::string& label) {
    std::string want = normalize_label(label);
    for (const auto& e : catalog())
        if (e.label == want) return &e;
    return nullptr;
}

inline const CatalogEntry& entry(const std::string& label) {
    const CatalogEntry* e = find_entry(label);
    if (!e) throw Error("unknown catalog label: " + label);
    return *e;
}

template <class K>
Algebra<K> instantiate(const CatalogEntry& e, const std::map<std::string, K>& binds) {
    for (const auto& p : e.params)
        if (!binds.count(p)) throw Error(e.label + ": missing parameter " + p);
    for (const auto& [name, bad] : e.excluded_values) {
        if (binds.at(name) == K(bad))
            throw Error(e.label + ": parameter " + name + " = " + to_string(bad) +
                        " outside the family domain");
    }
    if (e.radical) {
        K mu = binds.at("mu"), la = binds.at("lambda");
        if (!(mu * mu == K(1) - K(4) * la))
            throw Error(e.label + ": radical constraint mu^2 = 1 - 4*lambda not satisfied");
    }
    Algebra<K> a(e.dim, e.label);
    a.params = binds;
    for (const auto& t : e.products) {
        if (t.i > e.dim || t.j > e.dim || t.k > e.dim) throw Error(e.label + ": bad product index");
        a.prod(t.i - 1, t.j - 1, t.k - 1) += t.coef.eval(binds);
    }
    return a;
}

template <class K>
Algebra<K> instantiate(const std::string& label, const std::map<std::string, K>& binds) {
    return instantiate<K>(entry(label), binds);
}

inline Algebra<GaussRational> instantiate(const std::string& label) {
    return instantiate<GaussRational>(label, {});
}

namespace detail {

inline ParamMap pm(std::initializer_list<std::pair<const char*, GaussRational>> init) {
    ParamMap m;
    for (const auto& [k, v] : init) m[k] = v;
    return m;
}

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    Coef lam = Coef::param("lambda");
    Coef alp = Coef::param("alpha");
    Coef mu = Coef::param("mu");
    GaussRational I = GaussRational::i();

    // {2, 3, 5/2, -1, 7/3} minus excluded values, the shared sample pool
    std::vector<GaussRational> pool{GaussRational(2), GaussRational(3),
                                    GaussRational(make_rational(5, 2)), GaussRational(-1),
                                    GaussRational(make_rational(7, 3))};
    // (lambda, mu) pairs with mu^2 = 1 - 4*lambda solvable in Q
    std::vector<std::pair<GaussRational, GaussRational>> radical_pairs{
        {GaussRational(make_rational(3, 16)), GaussRational(make_rational(1, 2))},
        {GaussRational(make_rational(2, 9)), GaussRational(make_rational(1, 3))},
        {GaussRational(-2), GaussRational(3)},
        {GaussRational(-6), GaussRational(5)},
        {GaussRational(-12), GaussRational(7)}};

    auto add = [&cat](CatalogEntry e) { cat.push_back(std::move(e)); };
    auto one_param_samples = [&pool](const std::string& name,
                                     const std::vector<GaussRational>& extra,
                                     const std::vector<GaussRational>& excluded) {
        std::vector<ParamMap> out;
        auto push = [&](const GaussRational& v) {
            for (const auto& bad : excluded)
                if (v == bad) return;
            out.push_back({{name, v}});
        };
        for (const auto& v : pool) push(v);
        for (const auto& v : extra) push(v);
        return out;
    };

    for (std::size_t d = 1; d <= 4; ++d) {
        CatalogEntry e;
        e.label = "zero_" + std::to_string(d);
        e.dim = d;
        e.provenance = "zero algebra, the closed orbit every nilpotent orbit degenerates to";
        e.kind = EntryKind::Zero;
        add(e);
    }

    auto base = [&](std::string label, std::size_t dim, std::vector<ProductTerm> prods,
                    std::string prov, std::vector<std::string> params = {},
                    std::vector<ParamMap> samples = {}) {
        CatalogEntry e;
        e.label = std::move(label);
        e.dim = dim;
        e.products = std::move(prods);
        e.provenance = std::move(prov);
        e.kind = EntryKind::NovikovBase;
        e.params = std::move(params);
        e.default_samples = std::move(samples);
        add(e);
    };

    base("L2s_01", 2, {{1, 1, 2, 1}},
         "the unique nontrivial 2-dimensional nilpotent left-symmetric algebra");
    base("L3s_01", 3, {{1, 1, 2, 1}},
         "3-dimensional extension base: the 2-dimensional algebra padded with a central line");
    base("L3s_02", 3, {{1, 1, 3, 1}, {2, 2, 3, 1}}, "3-dimensional nilpotent Novikov catalog");
    base("L3s_03", 3, {{1, 2, 3, 1}, {2, 1, 3, -1}}, "3-dimensional nilpotent Novikov catalog");
    base("L3s_04", 3, {{1, 1, 3, lam}, {2, 1, 3, 1}, {2, 2, 3, 1}},
         "3-dimensional nilpotent Novikov catalog", {"lambda"},
         one_param_samples("lambda", {GaussRational(0), GaussRational(1)}, {}));
    base("L3s_05", 3, {{1, 1, 2, 1}, {2, 1, 3, 1}}, "3-dimensional nilpotent Novikov catalog");
    base("L3s_06", 3, {{1, 1, 2, 1}, {1, 2, 3, 1}, {2, 1, 3, lam}},
         "3-dimensional nilpotent Novikov catalog", {"lambda"},
         one_param_samples("lambda", {GaussRational(0), GaussRational(1)}, {}));

    auto four = [&](std::string label, std::vector<ProductTerm> prods,
                    std::vector<std::string> params = {}, std::vector<ParamMap> samples = {},
                    std::vector<std::pair<std::string, GaussRational>> excluded = {},
                    bool radical = false) {
        CatalogEntry e;
        e.label = std::move(label);
        e.dim = 4;
        e.products = std::move(prods);
        e.params = std::move(params);
        e.default_samples = std::move(samples);
        e.excluded_values = std::move(excluded);
        e.radical = radical;
        e.provenance = "4-dimensional non-Novikov classification list";
        e.kind = EntryKind::NonNovikov;
        add(e);
    };

    four("L4_01", {{1, 1, 2, 1}, {1, 2, 4, 1}, {2, 3, 4, 1}, {3, 1, 4, 1}});
    four("L4_02", {{1, 1, 2, 1}, {2, 3, 4, 1}, {3, 1, 4, 1}});
    four("L4_03", {{1, 1, 2, 1}, {1, 2, 4, 1}, {2, 3, 4, 1}});
    four("L4_04", {{1, 1, 2, 1}, {2, 3, 4, 1}});
    four("L4_05", {{1, 1, 3, 1}, {2, 2, 3, 1}, {3, 1, 4, 1}});
    four("L4_06", {{1, 1, 3, 1}, {1, 2, 4, 1}, {2, 2, 3, 1}, {3, 1, 4, 1}});
    four("L4_07", {{1, 1, 3, 1}, {2, 2, 3, 1}, {3, 1, 4, 1}, {3, 2, 4, I}});
    four("L4_08", {{1, 1, 3, 1}, {1, 2, 4, 1}, {2, 2, 3, 1}, {3, 1, 4, 1}, {3, 2, 4, I}});
    four("L4_09", {{1, 2, 3, 1}, {1, 3, 4, -2}, {2, 1, 3, -1}, {3, 1, 4, 1}});
    four("L4_10", {{1, 2, 3, 1}, {1, 3, 4, -2}, {2, 1, 3, -1}, {2, 2, 4, 1}, {3, 1, 4, 1}});

    std::vector<ParamMap> lam_nonzero =
        one_param_samples("lambda", {}, {GaussRational(0)});
    four("L4_11",
         {{1, 1, 3, lam}, {2, 1, 3, 1}, {2, 2, 3, 1}, {2, 3, 4, 1}, {3, 1, 4, lam}},
         {"lambda"}, lam_nonzero, {{"lambda", GaussRational(0)}});
    four("L4_12",
         {{1, 1, 3, lam}, {1, 2, 4, 1}, {2, 1, 3, 1}, {2, 2, 3, 1}, {2, 3, 4, 1}, {3, 1, 4, lam}},
         {"lambda"}, lam_nonzero, {{"lambda", GaussRational(0)}});

    std::vector<ParamMap> radical_samples;
    for (const auto& [l, m] : radical_pairs)
        radical_samples.push_back(detail::pm({{"lambda", l}, {"mu", m}}));
    auto radical_family = [&](std::string label, bool sq_shift, int mu_sign) {
        // shared skeleton of the four sqrt(1-4*lambda) families; mu stands
        // for the radical, mu_sign picks the branch
        Coef branch = mu_sign < 0 ? Coef(1) - mu : Coef(1) + mu;
        Coef conjugate = mu_sign < 0 ? Coef(1) + mu : Coef(1) - mu;
        std::vector<ProductTerm> prods{{1, 1, 3, lam},
                                       {2, 2, 3, 1},
                                       {2, 1, 3, 1},
                                       {1, 3, 4, Coef(2) * lam},
                                       {3, 2, 4, -(Coef(2) * lam)},
                                       {2, 3, 4, branch},
                                       {3, 1, 4, -(lam * conjugate)}};
        if (sq_shift) prods.push_back({2, 2, 4, Coef(1)});
        four(std::move(label), std::move(prods), {"lambda", "mu"}, radical_samples,
             {{"lambda", GaussRational(0)}}, true);
    };
    radical_family("L4_13", false, -1);
    radical_family("L4_14", true, -1);
    radical_family("L4_15", false, +1);
    radical_family("L4_16", true, +1);

    std::vector<ParamMap> alpha_any = one_param_samples("alpha", {}, {});
    four("L4_17",
         {{1, 1, 2, 1}, {1, 3, 4, alp}, {2, 1, 3, 1}, {2, 2, 4, 1}, {3, 1, 4, Coef(1) - alp}},
         {"alpha"}, alpha_any);
    four("L4_18",
         {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 4, -1}, {2, 1, 3, 1}, {2, 2, 4, 1}, {3, 1, 4, 2}});
    four("L4_19", {{1, 1, 2, 1}, {2, 1, 3, 1}, {2, 3, 4, 1}});
    four("L4_20", {{1, 1, 2, 1}, {1, 3, 4, 1}, {2, 1, 3, 1}, {2, 3, 4, 1}, {3, 1, 4, -1}});
    four("L4_21",
         {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 4, alp}, {2, 1, 3, 1}, {2, 3, 4, 1},
          {3, 1, 4, -alp}},
         {"alpha"}, alpha_any);
    four("L4_22",
         {{1, 1, 2, 1}, {1, 2, 3, 1}, {1, 3, 4, Coef(2) * alp + Coef(1)}, {2, 1, 4, 1},
          {2, 2, 4, 1}, {3, 1, 4, -1}},
         {"alpha"}, alpha_any);
    std::vector<ParamMap> two_param;
    {
        std::vector<GaussRational> pool2{GaussRational(2), GaussRational(3),
                                         GaussRational(make_rational(5, 2)), GaussRational(-1),
                                         GaussRational(make_rational(7, 3))};
        for (std::size_t k = 0; k < pool2.size(); ++k)
            two_param.push_back(detail::pm(
                {{"lambda", pool2[k]}, {"alpha", pool2[(k + 1) % pool2.size()]}}));
        // the lambda values the orbit analysis treats separately
        two_param.push_back(detail::pm({{"lambda", GaussRational(0)}, {"alpha", GaussRational(2)}}));
        two_param.push_back(detail::pm({{"lambda", GaussRational(1)}, {"alpha", GaussRational(2)}}));
    }
    four("L4_23",
         {{1, 1, 2, 1},
          {1, 2, 3, 1},
          {1, 3, 4, (Coef(2) - lam) * alp + Coef(1)},
          {2, 1, 3, lam},
          {2, 2, 4, lam * alp + Coef(1)},
          {3, 1, 4, lam * alp - Coef(1)}},
         {"lambda", "alpha"}, two_param);
    four("L4_24",
         {{1, 1, 2, 1},
          {1, 2, 3, 1},
          {1, 3, 4, Coef(2) * (Coef(3) - lam)},
          {2, 1, 3, lam},
          {2, 1, 4, 1},
          {2, 2, 4, Coef(2) * lam * (lam + Coef(1))},
          {3, 1, 4, Coef(4) * lam}},
         {"lambda"},
         one_param_samples("lambda", {}, {GaussRational(0), GaussRational(1)}),
         {{"lambda", GaussRational(0)}, {"lambda", GaussRational(1)}});

    auto component = [&](std::string label, std::vector<ProductTerm> prods,
                         std::vector<std::string> params, std::vector<ParamMap> samples,
                         std::string prov) {
        CatalogEntry e;
        e.label = std::move(label);
        e.dim = 4;
        e.products = std::move(prods);
        e.params = std::move(params);
        e.default_samples = std::move(samples);
        e.provenance = std::move(prov);
        e.kind = EntryKind::NovikovComponent;
        add(e);
    };
    component("N4_20",
              {{1, 2, 3, 1}, {1, 1, 4, alp}, {1, 3, 4, 1}, {2, 2, 4, 1}, {2, 3, 4, 1},
               {3, 2, 4, -1}},
              {"alpha"}, alpha_any, "component family of the 4-dimensional Novikov variety");
    component("N4_22",
              {{1, 1, 2, 1},
               {1, 2, 3, 1},
               {1, 3, 4, Coef(2) - lam},
               {2, 1, 3, lam},
               {2, 2, 4, lam},
               {3, 1, 4, lam}},
              {"lambda"}, one_param_samples("lambda", {GaussRational(0), GaussRational(1)}, {}),
              "component family of the 4-dimensional Novikov variety; encoded in the "
              "left-symmetric normalization e2*e1 = lambda*e3 (it is the central extension of "
              "L3s_06(lambda) by its Novikov cocycle (2-lambda)*D13+lambda*(D22+D31))");
    return cat;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = detail::build_catalog();
    return cat;
}

}  // namespace lsa
