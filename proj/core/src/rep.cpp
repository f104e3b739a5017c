#include "qrep/rep.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qrep {

namespace {

void require_same_quiver(const Representation& a, const Representation& b) {
    if (a.quiver() != b.quiver()) throw QuiverMismatchError("representations live on different quivers");
    if (a.field() != b.field()) throw FieldMismatchError("representations live over different fields");
}

// paths[v][w] = Q(v,w) in (length, lex) order; single frontier sweep per
// source vertex. Throws on cycles.
std::vector<std::vector<std::vector<Path>>> paths_table(const Quiver& q) {
    std::size_t n = q.vertex_count();
    longest_path_length(q);  // acyclicity gate
    std::vector<std::vector<std::vector<Path>>> table(n);
    for (VertexId v = 0; v < n; ++v) {
        table[v].resize(n);
        std::vector<Path> frontier{Path(v)};
        while (!frontier.empty()) {
            std::vector<Path> next;
            for (const Path& p : frontier) {
                table[v][p.target()].push_back(p);
                for (ArrowId a : q.out_arrows(p.target())) next.push_back(p.extended_by(q, a));
            }
            frontier = std::move(next);
        }
    }
    return table;
}

std::size_t path_index(const std::vector<Path>& paths, const Path& p) {
    auto it = std::find(paths.begin(), paths.end(), p);
    if (it == paths.end()) throw InternalError("path missing from its enumeration block");
    return static_cast<std::size_t>(it - paths.begin());
}

}  // namespace

Representation::Representation(std::shared_ptr<const Quiver> quiver, const Field& field,
                               std::vector<std::size_t> dims, std::vector<Matrix> mats)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), mats_(std::move(mats)) {
    if (!quiver_) throw InputError("representation requires a quiver");
    if (dims_.size() != quiver_->vertex_count()) {
        throw DimensionMismatchError("dimension vector does not match vertex count");
    }
    if (mats_.size() != quiver_->arrow_count()) {
        throw DimensionMismatchError("matrix list does not match arrow count");
    }
    for (ArrowId a = 0; a < mats_.size(); ++a) {
        const Arrow& ar = quiver_->arrow(a);
        if (mats_[a].field() != field_) {
            throw FieldMismatchError("matrix for arrow '" + ar.name + "' is over the wrong field");
        }
        if (mats_[a].rows() != dims_[ar.target] || mats_[a].cols() != dims_[ar.source]) {
            throw DimensionMismatchError("matrix for arrow '" + ar.name + "' has the wrong shape");
        }
    }
}

Representation Representation::zero(std::shared_ptr<const Quiver> quiver, const Field& field) {
    std::vector<std::size_t> dims(quiver->vertex_count(), 0);
    std::vector<Matrix> mats(quiver->arrow_count(), Matrix(field, 0, 0));
    return Representation(std::move(quiver), field, std::move(dims), std::move(mats));
}

std::size_t Representation::total_dim() const {
    std::size_t total = 0;
    for (std::size_t d : dims_) total += d;
    return total;
}

bool Representation::is_zero() const { return total_dim() == 0; }

Matrix Representation::path_matrix(const Path& p) const {
    Matrix result = Matrix::identity(field_, dim(p.source()));
    for (ArrowId a : p.arrows()) result = mats_[a] * result;
    return result;
}

bool Representation::operator==(const Representation& rhs) const {
    return quiver() == rhs.quiver() && field_ == rhs.field_ && dims_ == rhs.dims_ &&
           mats_ == rhs.mats_;
}

RepMorphism::RepMorphism(Representation source, Representation target, std::vector<Matrix> comps)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
    require_same_quiver(source_, target_);
    const Quiver& q = source_.quiver();
    if (comps_.size() != q.vertex_count()) {
        throw DimensionMismatchError("component list does not match vertex count");
    }
    for (VertexId v = 0; v < comps_.size(); ++v) {
        if (comps_[v].field() != source_.field()) {
            throw FieldMismatchError("component at '" + q.vertex_name(v) + "' over the wrong field");
        }
        if (comps_[v].rows() != target_.dim(v) || comps_[v].cols() != source_.dim(v)) {
            throw DimensionMismatchError("component at '" + q.vertex_name(v) + "' has the wrong shape");
        }
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (comps_[ar.target] * source_.mat(a) != target_.mat(a) * comps_[ar.source]) {
            throw MorphismError("naturality square fails at arrow '" + ar.name + "'");
        }
    }
}

RepMorphism RepMorphism::zero(Representation source, Representation target) {
    std::vector<Matrix> comps;
    for (VertexId v = 0; v < source.quiver().vertex_count(); ++v) {
        comps.emplace_back(source.field(), target.dim(v), source.dim(v));
    }
    return RepMorphism(std::move(source), std::move(target), std::move(comps));
}

RepMorphism RepMorphism::identity(const Representation& rep) {
    std::vector<Matrix> comps;
    for (VertexId v = 0; v < rep.quiver().vertex_count(); ++v) {
        comps.push_back(Matrix::identity(rep.field(), rep.dim(v)));
    }
    return RepMorphism(rep, rep, std::move(comps));
}

std::size_t evaluate(const Representation& m, VertexId v) {
    if (v >= m.quiver().vertex_count()) throw UnknownVertexError("evaluate: vertex out of range");
    return m.dim(v);
}

Representation e_lambda(std::shared_ptr<const Quiver> q, const Field& f, VertexId v, std::size_t n) {
    if (v >= q->vertex_count()) throw UnknownVertexError("e_lambda: vertex out of range");
    auto paths = paths_table(*q);
    std::size_t nv = q->vertex_count();
    std::vector<std::size_t> dims(nv);
    for (VertexId w = 0; w < nv; ++w) dims[w] = n * paths[v][w].size();
    std::vector<Matrix> mats;
    mats.reserve(q->arrow_count());
    for (ArrowId a = 0; a < q->arrow_count(); ++a) {
        const Arrow& ar = q->arrow(a);
        Matrix m(f, dims[ar.target], dims[ar.source]);
        for (std::size_t i = 0; i < paths[v][ar.source].size(); ++i) {
            std::size_t j = path_index(paths[v][ar.target], paths[v][ar.source][i].extended_by(*q, a));
            for (std::size_t t = 0; t < n; ++t) m.at(j * n + t, i * n + t) = Scalar::one(f);
        }
        mats.push_back(std::move(m));
    }
    return Representation(std::move(q), f, std::move(dims), std::move(mats));
}

Representation e_rho(std::shared_ptr<const Quiver> q, const Field& f, VertexId v, std::size_t n) {
    if (v >= q->vertex_count()) throw UnknownVertexError("e_rho: vertex out of range");
    auto paths = paths_table(*q);
    std::size_t nv = q->vertex_count();
    std::vector<std::size_t> dims(nv);
    for (VertexId w = 0; w < nv; ++w) dims[w] = n * paths[w][v].size();
    std::vector<Matrix> mats;
    mats.reserve(q->arrow_count());
    for (ArrowId a = 0; a < q->arrow_count(); ++a) {
        const Arrow& ar = q->arrow(a);
        Matrix m(f, dims[ar.target], dims[ar.source]);
        // block row q reads block q∘a of the source
        for (std::size_t j = 0; j < paths[ar.target][v].size(); ++j) {
            std::size_t i = path_index(paths[ar.source][v], paths[ar.target][v][j].prefixed_by(*q, a));
            for (std::size_t t = 0; t < n; ++t) m.at(j * n + t, i * n + t) = Scalar::one(f);
        }
        mats.push_back(std::move(m));
    }
    return Representation(std::move(q), f, std::move(dims), std::move(mats));
}

Representation stalk(std::shared_ptr<const Quiver> q, const Field& f, VertexId v, std::size_t n) {
    if (v >= q->vertex_count()) throw UnknownVertexError("stalk: vertex out of range");
    std::vector<std::size_t> dims(q->vertex_count(), 0);
    dims[v] = n;
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q->arrow_count(); ++a) {
        const Arrow& ar = q->arrow(a);
        mats.emplace_back(f, dims[ar.target], dims[ar.source]);
    }
    return Representation(std::move(q), f, std::move(dims), std::move(mats));
}

VertexKernelData vertex_kernels(const Representation& m) {
    const Quiver& q = m.quiver();
    VertexKernelData data;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        Matrix out_map(m.field(), 0, m.dim(v));
        for (ArrowId a : q.out_arrows(v)) out_map = vstack(out_map, m.mat(a));
        data.kernel_basis.push_back(kernel_basis(out_map));

        Matrix in_map(m.field(), m.dim(v), 0);
        for (ArrowId a : q.in_arrows(v)) in_map = hstack(in_map, m.mat(a));
        CokernelProjection ck = cokernel_projection(in_map);
        data.coker_projection.push_back(std::move(ck.projection));
        data.coker_section.push_back(std::move(ck.section));

        data.kernel_dim.push_back(data.kernel_basis.back().cols());
        data.coker_dim.push_back(ck.codim);
    }
    return data;
}

SubRepresentation socle(const Representation& m) {
    const Quiver& q = m.quiver();
    VertexKernelData data = vertex_kernels(m);
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        mats.emplace_back(m.field(), data.kernel_dim[ar.target], data.kernel_dim[ar.source]);
    }
    Representation soc(m.quiver_ptr(), m.field(), data.kernel_dim, std::move(mats));
    return SubRepresentation{soc, RepMorphism(soc, m, data.kernel_basis)};
}

EnvelopeResult injective_envelope(const Representation& m) {
    const Quiver& q = m.quiver();
    std::size_t n = q.vertex_count();
    auto paths = paths_table(q);
    VertexKernelData data = vertex_kernels(m);

    // E = (+)_v e_rho^v(K_v); over a field E(K_v) = K_v.
    std::vector<std::size_t> dims(n, 0);
    for (VertexId w = 0; w < n; ++w) {
        for (VertexId v = 0; v < n; ++v) dims[w] += data.kernel_dim[v] * paths[w][v].size();
    }
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix em(m.field(), dims[ar.target], dims[ar.source]);
        std::size_t row_off = 0, col_base = 0;
        for (VertexId v = 0; v < n; ++v) {
            std::size_t kv = data.kernel_dim[v];
            const auto& tgt_paths = paths[ar.target][v];
            const auto& src_paths = paths[ar.source][v];
            for (std::size_t j = 0; j < tgt_paths.size(); ++j) {
                std::size_t i = path_index(src_paths, tgt_paths[j].prefixed_by(q, a));
                for (std::size_t t = 0; t < kv; ++t) {
                    em.at(row_off + j * kv + t, col_base + i * kv + t) = Scalar::one(m.field());
                }
            }
            row_off += kv * tgt_paths.size();
            col_base += kv * src_paths.size();
        }
        mats.push_back(std::move(em));
    }
    Representation envelope(m.quiver_ptr(), m.field(), dims, std::move(mats));

    // phi_v extends the identity on K_v inside M_v; psi_w stacks phi_{t(p)} M_p
    // over all paths p out of w, in the envelope's block order.
    std::vector<Matrix> phi;
    for (VertexId v = 0; v < n; ++v) {
        phi.push_back(complement_projection(data.kernel_basis[v], m.dim(v)));
    }
    std::vector<Matrix> psi;
    for (VertexId w = 0; w < n; ++w) {
        Matrix pw(m.field(), 0, m.dim(w));
        for (VertexId v = 0; v < n; ++v) {
            if (data.kernel_dim[v] == 0) continue;
            for (const Path& p : paths[w][v]) pw = vstack(pw, phi[v] * m.path_matrix(p));
        }
        psi.push_back(std::move(pw));
    }
    RepMorphism embedding(m, envelope, std::move(psi));
    for (VertexId w = 0; w < n; ++w) {
        if (rank(embedding.comp(w)) != m.dim(w)) {
            throw InternalError("envelope embedding fails to be injective at '" + q.vertex_name(w) + "'");
        }
    }
    return EnvelopeResult{std::move(envelope), std::move(embedding)};
}

PrecoverResult projective_precover(const Representation& m) {
    const Quiver& q = m.quiver();
    std::size_t n = q.vertex_count();
    auto paths = paths_table(q);
    VertexKernelData data = vertex_kernels(m);

    // P = (+)_v e_lambda^v(C_v).
    std::vector<std::size_t> dims(n, 0);
    for (VertexId w = 0; w < n; ++w) {
        for (VertexId v = 0; v < n; ++v) dims[w] += data.coker_dim[v] * paths[v][w].size();
    }
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix pm(m.field(), dims[ar.target], dims[ar.source]);
        std::size_t row_base = 0, col_off = 0;
        for (VertexId v = 0; v < n; ++v) {
            std::size_t cv = data.coker_dim[v];
            const auto& src_paths = paths[v][ar.source];
            const auto& tgt_paths = paths[v][ar.target];
            for (std::size_t i = 0; i < src_paths.size(); ++i) {
                std::size_t j = path_index(tgt_paths, src_paths[i].extended_by(q, a));
                for (std::size_t t = 0; t < cv; ++t) {
                    pm.at(row_base + j * cv + t, col_off + i * cv + t) = Scalar::one(m.field());
                }
            }
            row_base += cv * tgt_paths.size();
            col_off += cv * src_paths.size();
        }
        mats.push_back(std::move(pm));
    }
    Representation cover(m.quiver_ptr(), m.field(), dims, std::move(mats));

    // epsilon_w collects M_p sigma_v over blocks (v, p in Q(v,w)).
    std::vector<Matrix> eps;
    for (VertexId w = 0; w < n; ++w) {
        Matrix ew(m.field(), m.dim(w), 0);
        for (VertexId v = 0; v < n; ++v) {
            if (data.coker_dim[v] == 0) continue;
            for (const Path& p : paths[v][w]) ew = hstack(ew, m.path_matrix(p) * data.coker_section[v]);
        }
        eps.push_back(std::move(ew));
    }
    RepMorphism projection(cover, m, std::move(eps));
    for (VertexId w = 0; w < n; ++w) {
        if (rank(projection.comp(w)) != m.dim(w)) {
            throw InternalError("precover fails to be surjective at '" + q.vertex_name(w) + "'");
        }
    }
    return PrecoverResult{std::move(cover), std::move(projection)};
}

StandardResolution standard_resolution(const Representation& m) {
    const Quiver& q = m.quiver();
    std::size_t n = q.vertex_count();
    auto paths = paths_table(q);

    // generators = (+)_v e_lambda^v(M_v); block offsets per (v, path).
    std::vector<std::size_t> gen_dims(n, 0);
    std::vector<std::vector<std::size_t>> gen_off(n, std::vector<std::size_t>(n, 0));
    for (VertexId w = 0; w < n; ++w) {
        std::size_t off = 0;
        for (VertexId v = 0; v < n; ++v) {
            gen_off[w][v] = off;
            off += m.dim(v) * paths[v][w].size();
        }
        gen_dims[w] = off;
    }
    std::vector<Matrix> gen_mats;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix gm(m.field(), gen_dims[ar.target], gen_dims[ar.source]);
        for (VertexId v = 0; v < n; ++v) {
            std::size_t mv = m.dim(v);
            const auto& src_paths = paths[v][ar.source];
            const auto& tgt_paths = paths[v][ar.target];
            for (std::size_t i = 0; i < src_paths.size(); ++i) {
                std::size_t j = path_index(tgt_paths, src_paths[i].extended_by(q, a));
                for (std::size_t t = 0; t < mv; ++t) {
                    gm.at(gen_off[ar.target][v] + j * mv + t, gen_off[ar.source][v] + i * mv + t) =
                        Scalar::one(m.field());
                }
            }
        }
        gen_mats.push_back(std::move(gm));
    }
    Representation generators(m.quiver_ptr(), m.field(), gen_dims, std::move(gen_mats));

    // relations = (+)_{a: u -> u'} e_lambda^{u'}(M_u); block offsets per (a, path).
    std::vector<std::size_t> rel_dims(n, 0);
    std::vector<std::vector<std::size_t>> rel_off(n, std::vector<std::size_t>(q.arrow_count(), 0));
    for (VertexId w = 0; w < n; ++w) {
        std::size_t off = 0;
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
            rel_off[w][a] = off;
            off += m.dim(q.arrow(a).source) * paths[q.arrow(a).target][w].size();
        }
        rel_dims[w] = off;
    }
    std::vector<Matrix> rel_mats;
    for (ArrowId b = 0; b < q.arrow_count(); ++b) {
        const Arrow& br = q.arrow(b);
        Matrix rm(m.field(), rel_dims[br.target], rel_dims[br.source]);
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
            std::size_t mu = m.dim(q.arrow(a).source);
            const auto& src_paths = paths[q.arrow(a).target][br.source];
            const auto& tgt_paths = paths[q.arrow(a).target][br.target];
            for (std::size_t i = 0; i < src_paths.size(); ++i) {
                std::size_t j = path_index(tgt_paths, src_paths[i].extended_by(q, b));
                for (std::size_t t = 0; t < mu; ++t) {
                    rm.at(rel_off[br.target][a] + j * mu + t, rel_off[br.source][a] + i * mu + t) =
                        Scalar::one(m.field());
                }
            }
        }
        rel_mats.push_back(std::move(rm));
    }
    Representation relations(m.quiver_ptr(), m.field(), rel_dims, std::move(rel_mats));

    // counit: block (v, q) acts by M_q.
    std::vector<Matrix> counit_comps;
    for (VertexId w = 0; w < n; ++w) {
        Matrix cw(m.field(), m.dim(w), 0);
        for (VertexId v = 0; v < n; ++v) {
            for (const Path& p : paths[v][w]) cw = hstack(cw, m.path_matrix(p));
        }
        counit_comps.push_back(std::move(cw));
    }
    RepMorphism counit(generators, m, std::move(counit_comps));

    // inclusion: block (a: u -> u', p) maps by M_a into (u', p) and by -id
    // into (u, p∘a).
    std::vector<Matrix> incl_comps;
    for (VertexId w = 0; w < n; ++w) {
        Matrix dw(m.field(), gen_dims[w], rel_dims[w]);
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
            const Arrow& ar = q.arrow(a);
            std::size_t mu = m.dim(ar.source);
            const auto& up_paths = paths[ar.target][w];
            for (std::size_t pi = 0; pi < up_paths.size(); ++pi) {
                std::size_t col0 = rel_off[w][a] + pi * mu;
                // +M_a into the (t(a), p) block
                const Matrix& ma = m.mat(a);
                std::size_t row0 = gen_off[w][ar.target] + pi * m.dim(ar.target);
                for (std::size_t r = 0; r < ma.rows(); ++r) {
                    for (std::size_t c = 0; c < ma.cols(); ++c) {
                        dw.at(row0 + r, col0 + c) = ma.at(r, c);
                    }
                }
                // -id into the (s(a), p∘a) block
                std::size_t j = path_index(paths[ar.source][w], up_paths[pi].prefixed_by(q, a));
                std::size_t row1 = gen_off[w][ar.source] + j * mu;
                for (std::size_t t = 0; t < mu; ++t) {
                    dw.at(row1 + t, col0 + t) -= Scalar::one(m.field());
                }
            }
        }
        incl_comps.push_back(std::move(dw));
    }
    RepMorphism inclusion(relations, generators, std::move(incl_comps));

    for (VertexId w = 0; w < n; ++w) {
        if (!(counit.comp(w) * inclusion.comp(w)).is_zero()) {
            throw InternalError("standard resolution does not compose to zero");
        }
    }
    return StandardResolution{std::move(relations), std::move(generators), std::move(inclusion),
                              std::move(counit)};
}

std::vector<ResolutionStep> min_injective_resolution(const Representation& m, std::size_t max_degree) {
    std::vector<ResolutionStep> steps;
    Representation syzygy = m;
    RepMorphism into_syzygy = RepMorphism::identity(m);  // term_{i-1} -> syzygy, epi
    for (std::size_t degree = 0; degree <= max_degree; ++degree) {
        EnvelopeResult env = injective_envelope(syzygy);
        // map into the new term: envelope embedding composed with the
        // previous cokernel projection (for degree 0 the identity on M).
        RepMorphism map = compose(env.embedding, into_syzygy);
        steps.push_back(ResolutionStep{env.envelope, std::move(map)});
        if (degree >= 2 && !steps.back().term.is_zero()) {
            throw InternalError("injective resolution over a field extends past degree 1");
        }
        QuotientRepresentation quo = cokernel(env.embedding);
        syzygy = quo.rep;
        into_syzygy = quo.projection;
    }
    return steps;
}

bool is_projective_rep(const Representation& m) {
    const Quiver& q = m.quiver();
    longest_path_length(q);  // acyclicity gate
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        Matrix in_map(m.field(), m.dim(v), 0);
        for (ArrowId a : q.in_arrows(v)) in_map = hstack(in_map, m.mat(a));
        if (rank(in_map) != in_map.cols()) return false;
    }
    return true;
}

bool is_injective_rep(const Representation& m) {
    EnvelopeResult env = injective_envelope(m);
    for (VertexId v = 0; v < m.quiver().vertex_count(); ++v) {
        if (env.envelope.dim(v) != m.dim(v)) return false;
    }
    return true;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    require_same_quiver(a, b);
    std::vector<std::size_t> dims;
    for (VertexId v = 0; v < a.quiver().vertex_count(); ++v) dims.push_back(a.dim(v) + b.dim(v));
    std::vector<Matrix> mats;
    for (ArrowId ar = 0; ar < a.quiver().arrow_count(); ++ar) {
        mats.push_back(direct_sum(a.mat(ar), b.mat(ar)));
    }
    return Representation(a.quiver_ptr(), a.field(), std::move(dims), std::move(mats));
}

RepMorphism direct_sum(const RepMorphism& f, const RepMorphism& g) {
    Representation src = direct_sum(f.source(), g.source());
    Representation tgt = direct_sum(f.target(), g.target());
    std::vector<Matrix> comps;
    for (VertexId v = 0; v < src.quiver().vertex_count(); ++v) {
        comps.push_back(direct_sum(f.comp(v), g.comp(v)));
    }
    return RepMorphism(std::move(src), std::move(tgt), std::move(comps));
}

SubRepresentation kernel(const RepMorphism& f) {
    const Representation& m = f.source();
    const Quiver& q = m.quiver();
    std::vector<Matrix> bases;
    std::vector<std::size_t> dims;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        bases.push_back(kernel_basis(f.comp(v)));
        dims.push_back(bases.back().cols());
    }
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        // restricted arrow map in kernel coordinates
        Matrix image = m.mat(a) * bases[ar.source];
        Matrix coords = complement_projection(bases[ar.target], m.dim(ar.target)) * image;
        if (bases[ar.target] * coords != image) {
            throw InternalError("kernel is not preserved by an arrow map");
        }
        mats.push_back(std::move(coords));
    }
    Representation ker(m.quiver_ptr(), m.field(), std::move(dims), std::move(mats));
    return SubRepresentation{ker, RepMorphism(ker, m, std::move(bases))};
}

QuotientRepresentation cokernel(const RepMorphism& f) {
    const Representation& t = f.target();
    const Quiver& q = t.quiver();
    std::vector<Matrix> projections, sections;
    std::vector<std::size_t> dims;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        CokernelProjection ck = cokernel_projection(f.comp(v));
        dims.push_back(ck.codim);
        projections.push_back(std::move(ck.projection));
        sections.push_back(std::move(ck.section));
    }
    std::vector<Matrix> mats;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix induced = projections[ar.target] * t.mat(a) * sections[ar.source];
        if (induced * projections[ar.source] != projections[ar.target] * t.mat(a)) {
            throw InternalError("cokernel arrow map is not well defined");
        }
        mats.push_back(std::move(induced));
    }
    Representation coker(t.quiver_ptr(), t.field(), std::move(dims), std::move(mats));
    return QuotientRepresentation{coker, RepMorphism(t, coker, std::move(projections))};
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    if (f.target() != g.source()) {
        throw DimensionMismatchError("compose: middle representations differ");
    }
    std::vector<Matrix> comps;
    for (VertexId v = 0; v < f.source().quiver().vertex_count(); ++v) {
        comps.push_back(g.comp(v) * f.comp(v));
    }
    return RepMorphism(f.source(), g.target(), std::move(comps));
}

bool is_mono(const RepMorphism& f) {
    for (VertexId v = 0; v < f.source().quiver().vertex_count(); ++v) {
        if (rank(f.comp(v)) != f.source().dim(v)) return false;
    }
    return true;
}

bool is_epi(const RepMorphism& f) {
    for (VertexId v = 0; v < f.source().quiver().vertex_count(); ++v) {
        if (rank(f.comp(v)) != f.target().dim(v)) return false;
    }
    return true;
}

std::optional<std::size_t> first_violated_relation(const Representation& m,
                                                   std::span<const Relation> relations) {
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const Relation& rel = relations[i];
        Matrix sum(m.field(), m.dim(rel.target()), m.dim(rel.source()));
        for (const auto& term : rel.terms()) {
            Scalar c = Scalar::from_rational(m.field(), term.coefficient);
            sum = sum + c * m.path_matrix(term.path);
        }
        if (!sum.is_zero()) return i;
    }
    return std::nullopt;
}

bool check_relations(const Representation& m, std::span<const Relation> relations) {
    return !first_violated_relation(m, relations).has_value();
}

}  // namespace qrep
