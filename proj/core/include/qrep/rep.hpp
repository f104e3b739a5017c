#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qrep/matrix.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

// A representation of an acyclic quiver by finite-dimensional vector spaces
// over an exact field: a dimension per vertex and a dims[t(a)] x dims[s(a)]
// matrix per arrow. Immutable after construction.
class Representation {
public:
    Representation(std::shared_ptr<const Quiver> quiver, const Field& field,
                   std::vector<std::size_t> dims, std::vector<Matrix> mats);

    static Representation zero(std::shared_ptr<const Quiver> quiver, const Field& field);

    const Quiver& quiver() const noexcept { return *quiver_; }
    const std::shared_ptr<const Quiver>& quiver_ptr() const noexcept { return quiver_; }
    const Field& field() const noexcept { return field_; }

    std::size_t dim(VertexId v) const { return dims_.at(v); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    const Matrix& mat(ArrowId a) const { return mats_.at(a); }
    std::size_t total_dim() const;
    bool is_zero() const;

    // The composite matrix along a path; identity for trivial paths.
    Matrix path_matrix(const Path& p) const;

    bool operator==(const Representation& rhs) const;
    bool operator!=(const Representation& rhs) const { return !(*this == rhs); }

private:
    std::shared_ptr<const Quiver> quiver_;
    Field field_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> mats_;
};

// A natural transformation between two representations of the same quiver:
// one matrix per vertex, commuting with every arrow. Construction verifies
// the naturality squares exactly.
class RepMorphism {
public:
    RepMorphism(Representation source, Representation target, std::vector<Matrix> comps);

    static RepMorphism zero(Representation source, Representation target);
    static RepMorphism identity(const Representation& rep);

    const Representation& source() const noexcept { return source_; }
    const Representation& target() const noexcept { return target_; }
    const Matrix& comp(VertexId v) const { return comps_.at(v); }
    const std::vector<Matrix>& comps() const noexcept { return comps_; }

private:
    Representation source_;
    Representation target_;
    std::vector<Matrix> comps_;
};

std::size_t evaluate(const Representation& m, VertexId v);

// Left adjoint of evaluation at v applied to K^n: dimension n*|Q(v,w)| at w,
// arrows act by shifting path blocks injectively.
Representation e_lambda(std::shared_ptr<const Quiver> q, const Field& f, VertexId v, std::size_t n);

// Right adjoint of evaluation at v applied to K^n: dimension n*|Q(w,v)| at w,
// arrows act by block projections.
Representation e_rho(std::shared_ptr<const Quiver> q, const Field& f, VertexId v, std::size_t n);

// K^n at v, zero elsewhere, zero maps.
Representation stalk(std::shared_ptr<const Quiver> q, const Field& f, VertexId v, std::size_t n);

// Per-vertex joint kernels of the out-arrow maps and cokernels of the in-arrow
// maps; at sinks K_v is everything, at sources C_v is everything.
struct VertexKernelData {
    std::vector<Matrix> kernel_basis;      // columns in M_v, one per vertex
    std::vector<Matrix> coker_projection;  // rows map M_v onto C_v coordinates
    std::vector<Matrix> coker_section;     // pivot-complement preimages, proj*section = id
    std::vector<std::size_t> kernel_dim;
    std::vector<std::size_t> coker_dim;
};

VertexKernelData vertex_kernels(const Representation& m);

struct SubRepresentation {
    Representation rep;
    RepMorphism inclusion;
};

// The largest semisimple subrepresentation, with its inclusion.
SubRepresentation socle(const Representation& m);

struct EnvelopeResult {
    Representation envelope;
    RepMorphism embedding;
};

// The injective envelope together with the explicit embedding; the embedding
// is checked to be a monomorphism at every vertex.
EnvelopeResult injective_envelope(const Representation& m);

struct PrecoverResult {
    Representation cover;
    RepMorphism projection;
};

// A projective precover together with the explicit epimorphism (rank-checked).
PrecoverResult projective_precover(const Representation& m);

// 0 -> relations -> generators -> M -> 0 with projective outer terms.
struct StandardResolution {
    Representation relations_term;
    Representation generators_term;
    RepMorphism inclusion;  // relations -> generators
    RepMorphism counit;     // generators -> M
};

StandardResolution standard_resolution(const Representation& m);

// Degree-indexed terms of the minimal injective resolution; steps[0].map is
// the envelope embedding of M, steps[i].map for i >= 1 maps term i-1 to term
// i. Terms beyond the resolution length are zero representations.
struct ResolutionStep {
    Representation term;
    RepMorphism map;
};

std::vector<ResolutionStep> min_injective_resolution(const Representation& m, std::size_t max_degree);

// Flat-equals-projective criterion over a field: every natural in-map
// (+)_{t(a)=v} M_{s(a)} -> M_v is injective.
bool is_projective_rep(const Representation& m);

// The envelope embedding is an isomorphism.
bool is_injective_rep(const Representation& m);

Representation direct_sum(const Representation& a, const Representation& b);
RepMorphism direct_sum(const RepMorphism& f, const RepMorphism& g);

SubRepresentation kernel(const RepMorphism& f);

struct QuotientRepresentation {
    Representation rep;
    RepMorphism projection;
};

QuotientRepresentation cokernel(const RepMorphism& f);

RepMorphism compose(const RepMorphism& g, const RepMorphism& f);

bool is_mono(const RepMorphism& f);
bool is_epi(const RepMorphism& f);

// M_rho = sum r_i M_{gamma_i} vanishes for every relation.
bool check_relations(const Representation& m, std::span<const Relation> relations);
std::optional<std::size_t> first_violated_relation(const Representation& m,
                                                   std::span<const Relation> relations);

// JSON de/serialization; the schema embeds the quiver by name or inline.
// When the document references a quiver by name, `context` must supply it.
Representation representation_from_json(const std::string& text, const std::string& source_name,
                                        std::shared_ptr<const Quiver> context = nullptr);
std::string representation_to_json(const Representation& m);
std::string morphism_to_json(const RepMorphism& f);

}  // namespace qrep
