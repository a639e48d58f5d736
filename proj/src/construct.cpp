#include "fupdate/construct.hpp"

#include "fupdate/codes.hpp"
#include "fupdate/error.hpp"
#include "fupdate/tower.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fupdate {

namespace {

ConstructionReport finish(const FunctionUpdateProblem& p, Matrix s, Method method,
                          std::string precondition, std::uint64_t budget) {
    ConstructionReport rep{EncoderScheme::from_reduction(p, std::move(s), method), 0,
                           std::move(precondition), std::nullopt, false};
    rep.length = rep.scheme.length();
    if (low_weight_count(p.n(), 1, 2 * p.epsilon(), p.q()) > budget) return rep;
    const InterferenceSets sets = enumerate_interference(p, budget);
    if (!is_valid_encoder(p, sets, rep.scheme.S).valid) {
        throw std::logic_error("internal: " + to_string(method) + " produced an invalid encoder");
    }
    rep.checked = true;
    rep.bounds = codelength_bounds(p, sets);
    return rep;
}

const StripedForm& require_striped(const FunctionUpdateProblem& p, const char* what) {
    if (!p.striped_form()) throw InvalidParams(std::string(what) + " needs a striped problem");
    return *p.striped_form();
}

std::size_t family_size(std::uint64_t q, std::size_t t, std::size_t l) {
    if (l == 2 * t) return static_cast<std::size_t>(std::min<std::uint64_t>(
        sat_add(sat_pow(q, t), 1), std::numeric_limits<std::size_t>::max()));
    return static_cast<std::size_t>(
        std::min<std::uint64_t>(sat_pow(q, l - t), std::numeric_limits<std::size_t>::max()));
}

std::size_t smallest_subspace_length(std::uint64_t q, std::size_t t, std::size_t a) {
    std::size_t l = 2 * t;
    while (family_size(q, t, l) < a) ++l;
    return l;
}

} // namespace

ConstructionReport naive(const FunctionUpdateProblem& p, std::uint64_t budget) {
    return finish(p, Matrix::identity(p.field(), p.m()), Method::naive, "none", budget);
}

ConstructionReport drop_one(const FunctionUpdateProblem& p, std::uint64_t budget) {
    const InterferenceSets sets = enumerate_interference(p, budget);
    std::optional<Vector> u;
    for_each_low_weight(p.m(), 1, p.m(), p.q(), [&](const Vector& v) {
        if (sets.contains_syndrome(v)) return true;
        u = v;
        return false;
    });
    if (!u) throw NoSavings();
    Matrix s = orthogonal_complement(Matrix::row_vector(p.field(), *u));
    std::string pre = "|I_FU| = " + std::to_string(sets.syndromes.size()) + " < q^m - 1; u =";
    for (Elem e : *u) pre += " " + std::to_string(e);
    return finish(p, std::move(s), Method::drop_one, pre, budget);
}

ConstructionReport striped_t1(const FunctionUpdateProblem& p, std::uint64_t budget) {
    const auto& sf = require_striped(p, "t1-ecc");
    if (sf.block.rows() != 1) throw InvalidParams("t1-ecc needs a single-row block C");
    auto pc = parity_check_best(p.field(), p.m(), 2 * p.epsilon() + 1);
    const std::string pre = "striped t = 1; " + pc.construction + " parity check, k = " +
                            std::to_string(pc.k);
    return finish(p, std::move(pc.H), Method::t1_ecc, pre, budget);
}

std::vector<Matrix> trivially_intersecting_family(const FieldPtr& field, std::size_t t,
                                                  std::size_t l, std::size_t a) {
    if (t == 0) throw InvalidParams("subspace dimension must be positive");
    if (l < 2 * t) {
        throw BadShape("target length " + std::to_string(l) + " is below 2t = " +
                       std::to_string(2 * t));
    }
    const std::uint64_t q = field->order();
    const std::size_t available = family_size(q, t, l);
    if (available < a) {
        throw InsufficientSubspaces("only " + std::to_string(available) +
                                    " trivially intersecting subspaces for a = " +
                                    std::to_string(a) + " at l = " + std::to_string(l));
    }
    std::vector<Matrix> family;
    family.reserve(a);
    const Matrix eye = Matrix::identity(field, t);
    if (l == 2 * t) {
        // Spread: [I; phi(g)] for g in GF(q^t), then [0; I].
        const FieldPtr tower = find_primitive_modulus(field, static_cast<unsigned>(t));
        for (std::size_t i = 0; i < a; ++i) {
            if (i < tower->order()) {
                family.push_back(vstack(eye, phi_expand(tower, static_cast<Elem>(i))));
            } else {
                family.push_back(vstack(Matrix(field, t, t), eye));
            }
        }
        return family;
    }
    // [I; P_g]: column j of P_g holds g x^j in GF(q^(l-t)); P_g - P_h = P_{g-h}
    // has full column rank whenever g != h.
    const FieldPtr ext = find_primitive_modulus(field, static_cast<unsigned>(l - t));
    const Elem x = ext->residue_x();
    for (std::size_t i = 0; i < a; ++i) {
        Matrix pg(field, l - t, t);
        Elem g = static_cast<Elem>(i);
        for (std::size_t j = 0; j < t; ++j) {
            const auto coords = ext->coefficients(g);
            for (std::size_t r = 0; r < l - t; ++r) pg(r, j) = coords[r];
            g = ext->mul(g, x);
        }
        family.push_back(vstack(eye, pg));
    }
    return family;
}

ConstructionReport subspace_eps1(const FunctionUpdateProblem& p, std::size_t target_l,
                                 std::uint64_t budget) {
    const auto& sf = require_striped(p, "subspace");
    if (p.epsilon() != 1) throw InvalidParams("subspace construction needs eps = 1");
    const std::size_t t = sf.block.rows();
    const auto family = trivially_intersecting_family(p.field(), t, target_l, sf.copies);
    Matrix s(p.field(), target_l, 0);
    for (const auto& b : family) s = hstack(s, b);
    const std::string pre = "eps = 1; l >= 2t; " + std::to_string(family_size(p.q(), t, target_l)) +
                            " subspaces available >= a = " + std::to_string(sf.copies);
    return finish(p, std::move(s), Method::subspace, pre, budget);
}

ConstructionReport companion_construction(const FunctionUpdateProblem& p, std::uint64_t budget) {
    const auto& sf = require_striped(p, "companion");
    const std::size_t t = sf.block.rows();
    const FieldPtr tower = find_primitive_modulus(p.field(), static_cast<unsigned>(t));
    auto pc = parity_check_best(tower, sf.copies, 2 * p.epsilon() + 1);
    Matrix s = expand_blocks(pc.H);
    std::string pre = "GF(q^t), q^t = " + std::to_string(tower->order()) + "; " +
                      pc.construction + " parity check " + std::to_string(pc.H.rows()) + "x" +
                      std::to_string(pc.H.cols());
    if (tower->order() >= sf.copies) pre += "; q^t >= a";
    return finish(p, std::move(s), Method::companion, pre, budget);
}

ConstructionReport construct(const FunctionUpdateProblem& p, Method method,
                             std::optional<std::size_t> target_l, std::uint64_t budget) {
    switch (method) {
    case Method::naive: return naive(p, budget);
    case Method::drop_one: return drop_one(p, budget);
    case Method::t1_ecc: return striped_t1(p, budget);
    case Method::companion: return companion_construction(p, budget);
    case Method::subspace: {
        const auto& sf = require_striped(p, "subspace");
        const std::size_t l =
            target_l ? *target_l : smallest_subspace_length(p.q(), sf.block.rows(), sf.copies);
        return subspace_eps1(p, l, budget);
    }
    case Method::oracle: {
        OracleResult r = optimal_codelength(p);
        std::string pre = r.certified ? "exhaustive subspace search" : "search not certified";
        return finish(p, std::move(r.S), Method::oracle, pre, budget);
    }
    case Method::external: break;
    }
    throw InvalidParams("method " + to_string(method) + " is not a construction");
}

ConstructionReport auto_construct(const FunctionUpdateProblem& p, std::uint64_t budget) {
    std::optional<ConstructionReport> best;
    auto consider = [&](auto&& make) {
        try {
            ConstructionReport r = make();
            if (!best || r.length < best->length) best = std::move(r);
        } catch (const Error&) {
            // Not applicable to this instance.
        }
    };
    const auto& sf = p.striped_form();
    if (sf && sf->block.rows() == 1) consider([&] { return striped_t1(p, budget); });
    if (sf) consider([&] { return companion_construction(p, budget); });
    if (sf && p.epsilon() == 1) {
        consider([&] { return construct(p, Method::subspace, std::nullopt, budget); });
    }
    consider([&] { return drop_one(p, budget); });
    consider([&] { return naive(p, budget); });
    if (!best) return naive(p, budget);
    return std::move(*best);
}

} // namespace fupdate
