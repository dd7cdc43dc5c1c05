#include "weylchar/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace weylchar {

namespace {

constexpr std::size_t kRootGenerationCap = 2048;

// Cartan matrix with entry [i][j] = <alpha_j, alpha_i^vee>.
std::vector<std::vector<Int>> cartan_matrix(char type, int rank) {
    auto bad = [&]() {
        throw ConfigError(std::string("unsupported simply connected type ") + type + std::to_string(rank));
    };
    std::vector<std::vector<Int>> c(rank, std::vector<Int>(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    };
    switch (type) {
    case 'a':
        if (rank < 1 || rank > 8) bad();
        chain(rank);
        break;
    case 'b': // last simple root short: <alpha_{r-1}, alpha_r^vee> = -2
        if (rank < 2 || rank > 8) bad();
        chain(rank);
        c[rank - 1][rank - 2] = -2;
        break;
    case 'c': // last simple root long
        if (rank < 2 || rank > 8) bad();
        chain(rank);
        c[rank - 2][rank - 1] = -2;
        break;
    case 'd': // fork: node r attached to node r-2 (d2 = a1 x a1)
        if (rank < 2 || rank > 8) bad();
        chain(rank - 1);
        if (rank >= 3) {
            c[rank - 3][rank - 1] = -1;
            c[rank - 1][rank - 3] = -1;
        }
        break;
    case 'f':
        if (rank != 4) bad();
        chain(rank);
        // alpha_2 long, alpha_3 short: <alpha_2, alpha_3^vee> = -2
        c[2][1] = -2;
        c[1][2] = -1;
        break;
    case 'g': // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3
        if (rank != 2) bad();
        c[0][1] = -3;
        c[1][0] = -1;
        break;
    default:
        bad();
    }
    return c;
}

} // namespace

RootDatum build_from_spec(DatumKind kind, std::string name, int rank,
                          std::vector<Vec> simple_roots, std::vector<Vec> simple_coroots,
                          Vec theta, std::vector<Vec> coweights, bool connected_center) {
    RootDatum d;
    d.kind_ = kind;
    d.name_ = std::move(name);
    d.rank_ = rank;
    d.connected_center_ = connected_center;
    d.theta_ = std::move(theta);
    d.coweights_ = std::move(coweights);
    d.generate_roots(simple_roots, simple_coroots);
    d.validate();
    return d;
}

void RootDatum::generate_roots(const std::vector<Vec>& simple_roots,
                               const std::vector<Vec>& simple_coroots) {
    const int ns = static_cast<int>(simple_roots.size());

    // Orbit of the simple (root, coroot, simple-coords) triples under all
    // simple reflections; this reaches every root exactly once per sign.
    std::map<Vec, std::pair<Vec, Vec>> seen; // coords -> (coroot, simple coords)
    std::deque<std::tuple<Vec, Vec, Vec>> queue;
    for (int i = 0; i < ns; ++i) {
        Vec e(ns, 0);
        e[i] = 1;
        queue.emplace_back(simple_roots[i], simple_coroots[i], e);
    }
    while (!queue.empty()) {
        auto [c, cv, sc] = queue.front();
        queue.pop_front();
        auto it = seen.find(c);
        if (it != seen.end()) {
            if (it->second.first != cv || it->second.second != sc)
                throw CheckError("root generation: inconsistent coroot along two reflection paths");
            continue;
        }
        seen.emplace(c, std::make_pair(cv, sc));
        if (seen.size() > kRootGenerationCap)
            throw BoundError("root generation exceeded cap; datum too large");
        for (int j = 0; j < ns; ++j) {
            Int pc = dot(c, simple_coroots[j]);
            Vec c2 = sub(c, scale(pc, simple_roots[j]));
            Vec cv2 = sub(cv, scale(dot(simple_roots[j], cv), simple_coroots[j]));
            Vec sc2 = sc;
            sc2[j] -= pc;
            queue.emplace_back(std::move(c2), std::move(cv2), std::move(sc2));
        }
    }

    std::vector<std::tuple<Int, Vec, Vec, Vec>> pos; // (height, simple coords, coords, coroot)
    for (const auto& [c, rest] : seen) {
        const auto& [cv, sc] = rest;
        bool nonneg = true, nonpos = true;
        Int height = 0;
        for (Int x : sc) {
            nonneg = nonneg && x >= 0;
            nonpos = nonpos && x <= 0;
            height += x;
        }
        if (!nonneg && !nonpos)
            throw CheckError("root generation produced a root of mixed sign over Delta");
        if (nonneg) pos.emplace_back(height, sc, c, cv);
    }
    std::sort(pos.begin(), pos.end());

    positive_.clear();
    coroots_.clear();
    simple_pos_index_.assign(ns, -1);
    for (const auto& [h, sc, c, cv] : pos) {
        int idx = static_cast<int>(positive_.size());
        positive_.push_back(Root{c, sc});
        coroots_.push_back(cv);
        pos_by_coords_.emplace(c, idx);
        if (h == 1) {
            for (int i = 0; i < ns; ++i)
                if (sc[i] == 1) simple_pos_index_[i] = idx;
        }
    }
    for (int i = 0; i < ns; ++i)
        if (simple_pos_index_[i] < 0) throw CheckError("simple root missing from positive system");

    refl_char_.clear();
    refl_cochar_.clear();
    for (int i = 0; i < ns; ++i) {
        Mat sc_m = Mat::identity(rank_), scc_m = Mat::identity(rank_);
        const Vec& a = simple_root(i);
        const Vec& av = simple_coroot(i);
        for (int r = 0; r < rank_; ++r)
            for (int s = 0; s < rank_; ++s) {
                sc_m.at(r, s) -= a[r] * av[s];
                scc_m.at(r, s) -= av[r] * a[s];
            }
        refl_char_.push_back(std::move(sc_m));
        refl_cochar_.push_back(std::move(scc_m));
    }
}

void RootDatum::validate() const {
    for (int k = 0; k < num_positive(); ++k) {
        if (pairing(positive_[k].coords, coroots_[k]) != 2)
            throw CheckError("root datum: <alpha, alpha^vee> != 2");
    }
    for (int i = 0; i < num_simple(); ++i) {
        if (pairing(theta_, simple_coroot(i)) != 1)
            throw CheckError("root datum: <theta, alpha^vee> != 1 for a simple root");
        if (!coweights_.empty()) {
            for (int j = 0; j < num_simple(); ++j) {
                Int expect = (i == j) ? 1 : 0;
                if (pairing(simple_root(j), coweights_[i]) != expect)
                    throw CheckError("root datum: fundamental coweight pairing is off");
            }
        }
    }
    // Positive system closed under root addition.
    for (int i = 0; i < num_positive(); ++i)
        for (int j = i; j < num_positive(); ++j) {
            Vec s = add(positive_[i].coords, positive_[j].coords);
            auto hit = pos_by_coords_.find(s);
            auto neg_hit = pos_by_coords_.find(neg(s));
            if (neg_hit != pos_by_coords_.end() && hit == pos_by_coords_.end())
                throw CheckError("root datum: positive system not closed under addition");
        }
}

const Vec& RootDatum::fundamental_coweight(int i) const {
    if (coweights_.empty())
        throw CapabilityError("fundamental coweights are not integral for datum " + name_);
    return coweights_.at(i);
}

Int RootDatum::pairing(const Vec& mu, const Vec& lam) const {
    if (static_cast<int>(mu.size()) != rank_ || static_cast<int>(lam.size()) != rank_)
        throw ConfigError("pairing: vectors do not live in the lattices of datum " + name_);
    return dot(mu, lam);
}

std::optional<std::pair<int, int>> RootDatum::lookup_root(const Vec& coords) const {
    auto it = pos_by_coords_.find(coords);
    if (it != pos_by_coords_.end()) return std::make_pair(it->second, 1);
    it = pos_by_coords_.find(neg(coords));
    if (it != pos_by_coords_.end()) return std::make_pair(it->second, -1);
    return std::nullopt;
}

bool RootDatum::is_positive_root(const Vec& coords) const {
    auto r = lookup_root(coords);
    return r && r->second > 0;
}

int RootDatum::positive_root_index(const Vec& coords) const {
    auto r = lookup_root(coords);
    if (!r || r->second < 0) throw ConfigError("not a positive root: " + vec_str(coords));
    return r->first;
}

Mat RootDatum::reflection_char(int pos_index) const {
    const Vec& a = positive_.at(pos_index).coords;
    const Vec& av = coroots_.at(pos_index);
    Mat m = Mat::identity(rank_);
    for (int r = 0; r < rank_; ++r)
        for (int s = 0; s < rank_; ++s) m.at(r, s) -= a[r] * av[s];
    return m;
}

Mat RootDatum::reflection_cochar(int pos_index) const {
    const Vec& a = positive_.at(pos_index).coords;
    const Vec& av = coroots_.at(pos_index);
    Mat m = Mat::identity(rank_);
    for (int r = 0; r < rank_; ++r)
        for (int s = 0; s < rank_; ++s) m.at(r, s) -= av[r] * a[s];
    return m;
}

RootDatum build_gl(int n) {
    if (n < 2 || n > 8) throw ConfigError("gl<n> supports 2 <= n <= 8");
    std::vector<Vec> roots, coroots, coweights;
    for (int i = 0; i + 1 < n; ++i) {
        Vec a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        roots.push_back(a);
        coroots.push_back(a);
        Vec cw(n, 0);
        for (int k = 0; k <= i; ++k) cw[k] = 1;
        coweights.push_back(cw);
    }
    Vec theta(n, 0);
    for (int i = 0; i < n; ++i) theta[i] = n - 1 - i;
    return build_from_spec(DatumKind::GL, "gl" + std::to_string(n), n, roots, coroots, theta,
                           coweights, /*connected_center=*/true);
}

RootDatum build_gsp4() {
    // Coordinates ordered (e_1, e_2, e_0); see root_datum.hpp for the fixed
    // convention.
    std::vector<Vec> roots = {{1, -1, 0}, {0, 2, -1}};
    std::vector<Vec> coroots = {{1, -1, 0}, {0, 1, 0}};
    std::vector<Vec> coweights = {{1, 0, 0}, {0, 0, -1}};
    Vec theta = {2, 1, 0};
    return build_from_spec(DatumKind::GSp4, "gsp4", 3, roots, coroots, theta, coweights,
                           /*connected_center=*/true);
}

RootDatum build_simply_connected(char type, int rank) {
    auto cart = cartan_matrix(type, rank);
    std::vector<Vec> roots, coroots;
    for (int j = 0; j < rank; ++j) {
        Vec a(rank);
        for (int i = 0; i < rank; ++i) a[i] = cart[i][j];
        roots.push_back(a);
        Vec av(rank, 0);
        av[j] = 1;
        coroots.push_back(av);
    }
    Vec theta(rank, 1);

    // Fundamental coweights solve Cartan^T x = e_i; by Cramer they are
    // integral exactly when every cofactor is divisible by det.
    Mat ct(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) ct.at(i, j) = cart[j][i];
    Int d = det_bareiss(ct);
    std::vector<Vec> coweights;
    bool integral = d != 0;
    for (int i = 0; integral && i < rank; ++i) {
        Vec x(rank, 0);
        for (int k = 0; k < rank; ++k) {
            Mat m = ct;
            for (int r = 0; r < rank; ++r) m.at(r, k) = (r == i) ? 1 : 0;
            Int num = det_bareiss(m);
            if (num % d != 0) {
                integral = false;
                break;
            }
            x[k] = num / d;
        }
        if (integral) coweights.push_back(x);
    }
    if (!integral) coweights.clear();

    bool connected_center = (d == 1 || d == -1);
    std::string name = (type == 'g' && rank == 2) ? "g2"
                                                  : std::string("sc-") + type + std::to_string(rank);
    return build_from_spec(DatumKind::SimplyConnected, name, rank, roots, coroots, theta,
                           coweights, connected_center);
}

RootDatum build_g2() { return build_simply_connected('g', 2); }

RootDatum build_gl_product(const std::vector<int>& blocks) {
    if (blocks.size() < 2) throw ConfigError("gl product needs at least two blocks");
    int rank = 0;
    for (int n : blocks) {
        if (n < 2 || n > 8) throw ConfigError("gl product blocks must satisfy 2 <= n <= 8");
        rank += n;
    }
    std::vector<Vec> roots, coroots, coweights;
    Vec theta(rank, 0);
    std::string name;
    int off = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        int n = blocks[b];
        if (!name.empty()) name += "x";
        name += "gl" + std::to_string(n);
        for (int i = 0; i + 1 < n; ++i) {
            Vec a(rank, 0);
            a[off + i] = 1;
            a[off + i + 1] = -1;
            roots.push_back(a);
            coroots.push_back(a);
            Vec cw(rank, 0);
            for (int k = 0; k <= i; ++k) cw[off + k] = 1;
            coweights.push_back(cw);
        }
        for (int i = 0; i < n; ++i) theta[off + i] = n - 1 - i;
        off += n;
    }
    return build_from_spec(DatumKind::GLProduct, name, rank, roots, coroots, theta, coweights,
                           /*connected_center=*/true);
}

RootDatum build_datum_from_name(const std::string& name) {
    if (name == "gsp4") return build_gsp4();
    if (name == "g2") return build_g2();
    if (name.rfind("sc-", 0) == 0 && name.size() >= 5) {
        char type = name[3];
        int rank = 0;
        try {
            rank = std::stoi(name.substr(4));
        } catch (...) {
            throw ConfigError("bad datum name: " + name);
        }
        return build_simply_connected(type, rank);
    }
    if (name.find('x') != std::string::npos) {
        std::vector<int> blocks;
        std::size_t pos = 0;
        while (pos < name.size()) {
            std::size_t next = name.find('x', pos);
            std::string tok = name.substr(pos, next == std::string::npos ? next : next - pos);
            if (tok.rfind("gl", 0) != 0) throw ConfigError("bad datum name: " + name);
            try {
                blocks.push_back(std::stoi(tok.substr(2)));
            } catch (...) {
                throw ConfigError("bad datum name: " + name);
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return build_gl_product(blocks);
    }
    if (name.rfind("gl", 0) == 0) {
        try {
            return build_gl(std::stoi(name.substr(2)));
        } catch (const ConfigError&) {
            throw;
        } catch (...) {
            throw ConfigError("bad datum name: " + name);
        }
    }
    throw ConfigError("unknown datum name: " + name);
}

std::vector<int> positive_roots_closure(const RootDatum& datum, std::vector<int> seed) {
    std::set<int> s;
    for (int k : seed) {
        if (k < 0 || k >= datum.num_positive())
            throw ConfigError("closure: index is not a positive root");
        s.insert(k);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i; j < cur.size(); ++j) {
                Vec sum = add(datum.positive_root(cur[i]).coords, datum.positive_root(cur[j]).coords);
                auto hit = datum.lookup_root(sum);
                if (hit && hit->second > 0 && s.insert(hit->first).second) grew = true;
            }
    }
    return std::vector<int>(s.begin(), s.end());
}

} // namespace weylchar
