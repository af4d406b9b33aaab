#pragma once

// Formal concepts of a binary relation: the truth-valued nucleus of the
// incidence profunctor between objects and attributes.

#include <span>
#include <string>
#include <vector>

#include "nucleus/profunctor.hpp"

namespace nucleus::galois {

/// Characteristic vector of a subset of objects or attributes.
using Subset = Presheaf<bool>;

class Context {
public:
    Context() = default;
    /// Throws LabelError on duplicate labels and SizeError on shape mismatch.
    Context(std::vector<std::string> objects, std::vector<std::string> attributes, Profunctor<bool> incidence,
            std::string name = {});

    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<std::string>& attributes() const noexcept { return attributes_; }
    const Profunctor<bool>& incidence() const noexcept { return incidence_; }
    const std::string& name() const noexcept { return name_; }

    Eigen::Index object_count() const noexcept { return incidence_.rows(); }
    Eigen::Index attribute_count() const noexcept { return incidence_.cols(); }

    Subset objects_from_labels(std::span<const std::string> labels) const;
    Subset attributes_from_labels(std::span<const std::string> labels) const;
    std::vector<std::string> object_labels(const Subset& s) const;
    std::vector<std::string> attribute_labels(const Subset& t) const;

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    Profunctor<bool> incidence_;
    std::string name_;
};

/// Attributes shared by every object of `s`.
Subset polar_up(const Context& ctx, const Subset& s);
/// Objects having every attribute of `t`.
Subset polar_down(const Context& ctx, const Subset& t);
Subset close_extent(const Context& ctx, const Subset& s);
Subset close_intent(const Context& ctx, const Subset& t);

struct Concept {
    Subset extent;
    Subset intent;

    friend bool operator==(const Concept& a, const Concept& b) { return a.extent == b.extent && a.intent == b.intent; }
};

bool is_concept(const Context& ctx, const Concept& c);

/// Concept generated by a set of objects.
Concept concept_of_extent(const Context& ctx, const Subset& s);

struct ConceptLattice {
    std::vector<Concept> concepts;
    /// order(i, j) iff extent_i is a subset of extent_j.
    Profunctor<bool> order;
};

/// All concepts in lectic order of their extents (NextClosure).
ConceptLattice enumerate_concepts(const Context& ctx);

/// Throws PreconditionError if either argument is not a concept of ctx.
Concept lattice_meet(const Context& ctx, const Concept& c1, const Concept& c2);
Concept lattice_join(const Context& ctx, const Concept& c1, const Concept& c2);

/// Hasse diagram (cover pairs i < j) of the lattice order.
std::vector<std::pair<std::size_t, std::size_t>> cover_relation(const ConceptLattice& lattice);

/// GraphViz rendering of the Hasse diagram; nodes show extent and intent.
std::string export_dot(const Context& ctx, const ConceptLattice& lattice);

bool is_subset(const Subset& a, const Subset& b);

}  // namespace nucleus::galois
