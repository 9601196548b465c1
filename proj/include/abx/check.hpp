#pragma once

// One verified relation between two exact quantities.

#include <string>
#include <vector>

#include "abx/rational.hpp"

namespace abx {

enum class Relation {
    Inequality,  // claim lhs >= rhs; slack = lhs - rhs
    Identity,    // claim lhs == rhs
    SetIdentity, // claim two polytopes coincide; lhs/rhs carry vertex counts
};

struct Comparison {
    std::string tag;   // theorem tag
    std::string label; // sub-case, e.g. "j=1"
    Relation kind = Relation::Inequality;
    Rational lhs;
    Rational rhs;
    bool equal = false; // lhs == rhs, or set equality for SetIdentity

    Rational slack() const { return lhs - rhs; }
    bool holds() const
    {
        switch (kind) {
        case Relation::Inequality:
            return lhs >= rhs;
        case Relation::Identity:
            return lhs == rhs;
        case Relation::SetIdentity:
            return equal;
        }
        return false;
    }
};

inline Comparison inequality(std::string tag, std::string label, Rational lhs, Rational rhs)
{
    bool eq = lhs == rhs;
    return {std::move(tag), std::move(label), Relation::Inequality, std::move(lhs), std::move(rhs), eq};
}

inline Comparison identity(std::string tag, std::string label, Rational lhs, Rational rhs)
{
    bool eq = lhs == rhs;
    return {std::move(tag), std::move(label), Relation::Identity, std::move(lhs), std::move(rhs), eq};
}

// Two booleans that must agree, e.g. "equality occurs" versus "is a simplex".
inline Comparison equivalence(std::string tag, std::string label, bool observed, bool predicted)
{
    return identity(std::move(tag), std::move(label), observed ? 1 : 0, predicted ? 1 : 0);
}

// premise => conclusion, recorded as 1 == 1 when it holds.
inline Comparison implication(std::string tag, std::string label, bool premise, bool conclusion)
{
    return identity(std::move(tag), std::move(label), (!premise || conclusion) ? 1 : 0, 1);
}

inline Comparison set_identity(std::string tag, std::string label, std::size_t lhs_count, std::size_t rhs_count,
                               bool equal)
{
    return {std::move(tag), std::move(label), Relation::SetIdentity, Rational(static_cast<unsigned long>(lhs_count)),
            Rational(static_cast<unsigned long>(rhs_count)), equal};
}

inline bool all_hold(const std::vector<Comparison>& cs)
{
    for (const auto& c : cs)
        if (!c.holds())
            return false;
    return true;
}

} // namespace abx
