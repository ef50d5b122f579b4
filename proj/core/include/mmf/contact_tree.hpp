#pragma once

#include "mmf/puiseux.hpp"

#include <map>
#include <optional>

namespace mmf {

struct NotPolynomial : std::runtime_error {
    explicit NotPolynomial(const std::string& m) : std::runtime_error("NotPolynomial: " + m) {}
};
struct NotSuccessor : std::runtime_error {
    NotSuccessor() : std::runtime_error("NotSuccessor") {}
};

struct RootGroup {
    AlgNum b; // root of P_v (0 for pass-through branches)
    int mult; // multiplicity in P_v
};

struct TreeVertex {
    Rat h;
    int parent = -1;         // parent vertex (-1: attached to the tree root at height 0)
    int parentEdge = -1;     // edge index arriving here
    std::vector<int> children;
    std::vector<PuiseuxTerm> prefix; // representative path: terms with exponent < h
    std::vector<int> through;        // series through the representative prefix at h
    std::vector<RootGroup> roots;    // values at h among through-series, grouped by equality
    int degree = 0;                  // deg P_v = sum of root multiplicities
    long M0 = 1;                     // lcm of prefix exponent denominators
    long Mv = 1;                     // lcm(M0, den h)
    Rat S;                           // sum_i mult_i * min(h, theta_i) over all series
    long nu = 0;                     // Mv * S (integral)
    AlgNum kappa;                    // cstar * prod_{theta_i < h} delta_i^{mult_i}
    bool rupture = false;
    int orbitSize = 1;      // union-tree vertices identified into this quotient vertex
    int branchRootIdx = -1; // index into parent's roots leading here
};

struct TreeEdge {
    int from = -1; // parent vertex (-1: the root point at height 0)
    int to = -1;   // child vertex (-1: unbounded tail)
    Rat h0, h1;    // for tails h1 is the expansion height (knowledge bound), unboundedKnown marks exact tails
    bool tail = false;
    bool exactTail = false; // tail of an exact (terminating) series: no vertices above, ever
    std::vector<PuiseuxTerm> prefix;
    std::vector<int> through;
    int degree = 0;
    long M0 = 1;
    Rat A; // S(r) = A + degree * r for r in the open interval
    AlgNum kappa;
};

struct ContactTree {
    CtxPtr ctx;
    AlgNum base;
    int m_p = 0;
    AlgNum cstar; // coefficient of y^{m_p} in f(0, y + p)
    std::vector<PSeries> series;
    std::vector<TreeVertex> V;
    std::vector<TreeEdge> E;
    std::vector<int> rupture;
    std::vector<int> augmented;
    int minVertex = -1;
    Rat height;

    int aug_pred(int v) const; // nearest strict ancestor of v inside the augmented set, -1 if none
    bool is_ancestor(int anc, int v) const;
};

// Contact tau: a path ending at a vertex or inside an edge.
struct Contact {
    bool atVertex = false;
    int idx = -1; // vertex or edge index
    Rat r;
    long M = 1; // lcm(prefix denominators, den r)
    Rat S;
    long nu = 0;
    long g = 1; // honest fold: M / M0
    std::vector<PuiseuxTerm> prefix;
    AlgNum kappa;
    std::vector<RootGroup> P; // P_tau as root groups; for edges: single group {0, degree}
    int degree = 0;
};

// Folded quasihomogeneous polynomial data attached to a contact:
// chart Q(c, w) = w^nu * P(w^{-Mr} c); honest variables (c, u = w^g).
struct QuasiPoly {
    long M = 1, g = 1;
    Rat r;
    long nu = 0;
    long wc = 0, wu = 0;                       // weights of (c, u); map degree = nu
    std::map<std::pair<long, long>, AlgNum> Q; // (c-exp, u-exp) -> coeff (folded, exact)
    AlgNum kappa;                              // exact angular constant multiplying Q
    struct Component {
        bool czero = false; // {c = 0}
        int E = 0;          // vanishing order of Q along the component
        long k = 0, s = 0;  // orbit binomial c^k - beta u^s (unless czero)
        AlgNum beta;
        std::vector<AlgNum> roots; // the orbit members
        Rat uExponentX;            // x-exponent of the u-variable (= g/M = 1/M0)
    };
    std::vector<Component> comps;
};

std::vector<ContactTree> build_trees(const Expansion& ex, const PlanePoly& f);
std::vector<ContactTree> build_trees(const PlanePoly& f, int extraHeight = 0, const Rat& atLeast = Rat(0));
// the tree at a given base point value (throws if absent)
const ContactTree& tree_at_origin(const std::vector<ContactTree>& ts);

Contact contact_of_vertex(const ContactTree& t, int v);
Contact contact_at(const ContactTree& t, int edgeIdx, const Rat& r);

QuasiPoly q_poly(const ContactTree& t, const Contact& c);

long n_dim(const Contact& c, long ell); // 2*max(nu,M)*ell - M*ell - floor(M r ell)

// the deck-orbit factor of Q_{a} whose branch leads toward v (a an augmented
// ancestor, v a vertex strictly above a reached through one of a's roots)
QuasiPoly::Component successor_factor(const ContactTree& t, int a, int v);

// expanded P_v over the context (monic, from the root groups)
APoly label_poly(const ContactTree& t, const std::vector<RootGroup>& roots);

} // namespace mmf
