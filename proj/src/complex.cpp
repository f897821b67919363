#include "zlkb/complex.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zlkb {

ZzMat zz_mat(std::size_t rows, std::size_t cols) {
    return ZzMat(rows, std::vector<ZigzagElement>(cols));
}

ZzMat zz_mat_mul(const ZzMat& a, const ZzMat& b) {
    std::size_t r = a.size();
    std::size_t mid = b.size();
    std::size_t c = mid == 0 ? 0 : b[0].size();
    if (r > 0 && a[0].size() != mid) throw std::invalid_argument("zz_mat_mul: shape mismatch");
    ZzMat out = zz_mat(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < mid; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < c; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
            }
        }
    return out;
}

bool zz_mat_is_zero(const ZzMat& m) {
    for (auto& row : m)
        for (auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

static const std::vector<Summand> kNoSummands;
static const ZzMat kNoMat;

ProjComplex ProjComplex::projective(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("projective: vertex out of range");
    ProjComplex x(n);
    x.set_support(0, {{Summand{i, 0}}});
    return x;
}

std::size_t ProjComplex::summand_count() const {
    std::size_t c = 0;
    for (auto& d : degs_) c += d.size();
    return c;
}

const std::vector<Summand>& ProjComplex::summands(int m) const {
    int i = idx(m);
    if (i < 0 || i >= int(degs_.size())) return kNoSummands;
    return degs_[i];
}

const ZzMat& ProjComplex::diff(int m) const {
    int i = idx(m);
    if (i < 0 || i + 1 >= int(degs_.size())) return kNoMat;
    return diffs_[i];
}

void ProjComplex::set_support(int lo, std::vector<std::vector<Summand>> degs) {
    lo_ = lo;
    degs_ = std::move(degs);
    diffs_.clear();
    for (std::size_t i = 0; i + 1 < degs_.size(); ++i)
        diffs_.push_back(zz_mat(degs_[i].size(), degs_[i + 1].size()));
}

void ProjComplex::set_diff(int m, ZzMat d) {
    int i = idx(m);
    if (i < 0 || i + 1 >= int(degs_.size())) throw std::out_of_range("set_diff: degree");
    if (d.size() != degs_[i].size() ||
        (d.size() > 0 && d[0].size() != degs_[i + 1].size()))
        throw std::invalid_argument("set_diff: shape");
    diffs_[i] = std::move(d);
}

ZzMat& ProjComplex::diff_mut(int m) {
    int i = idx(m);
    if (i < 0 || i + 1 >= int(degs_.size())) throw std::out_of_range("diff_mut: degree");
    return diffs_[i];
}

void ProjComplex::trim() {
    while (!degs_.empty() && degs_.front().empty()) {
        degs_.erase(degs_.begin());
        if (!diffs_.empty()) diffs_.erase(diffs_.begin());
        ++lo_;
    }
    while (!degs_.empty() && degs_.back().empty()) {
        degs_.pop_back();
        if (!diffs_.empty()) diffs_.pop_back();
    }
    if (degs_.empty()) {
        lo_ = 0;
        diffs_.clear();
    }
}

bool ProjComplex::degree_compatible() const {
    for (int m = lo(); m < hi(); ++m) {
        auto& src = summands(m);
        auto& dst = summands(m + 1);
        auto& d = diff(m);
        for (std::size_t i = 0; i < src.size(); ++i)
            for (std::size_t j = 0; j < dst.size(); ++j) {
                const ZigzagElement& e = d[i][j];
                if (e.is_zero()) continue;
                if (e.src() != src[i].v || e.dst() != dst[j].v) return false;
                if (e.degree() != src[i].q - dst[j].q) return false;
            }
    }
    return true;
}

bool ProjComplex::check_d_squared() const {
    for (int m = lo(); m + 1 < hi(); ++m) {
        if (!zz_mat_is_zero(zz_mat_mul(diff(m), diff(m + 1)))) return false;
    }
    return true;
}

ProjComplex ProjComplex::shifted(int k, int l) const {
    ProjComplex r(n_);
    r.lo_ = lo_ + k;
    r.degs_ = degs_;
    for (auto& deg : r.degs_)
        for (auto& s : deg) s.q += l;
    r.diffs_ = diffs_;
    if (k % 2 != 0) {
        for (auto& d : r.diffs_)
            for (auto& row : d)
                for (auto& e : row) e = -e;
    }
    return r;
}

ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.n_ != b.n_) throw std::invalid_argument("direct_sum: mismatched n");
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    ProjComplex r(a.n_);
    std::vector<std::vector<Summand>> degs;
    for (int m = lo; m <= hi; ++m) {
        std::vector<Summand> s = a.summands(m);
        auto& bs = b.summands(m);
        s.insert(s.end(), bs.begin(), bs.end());
        degs.push_back(std::move(s));
    }
    r.set_support(lo, std::move(degs));
    for (int m = lo; m < hi; ++m) {
        std::size_t aw = a.width(m), bw = b.width(m);
        std::size_t aw1 = a.width(m + 1);
        ZzMat d = zz_mat(aw + bw, aw1 + b.width(m + 1));
        auto& da = a.diff(m);
        for (std::size_t i = 0; i < aw && !da.empty(); ++i)
            for (std::size_t j = 0; j < aw1; ++j) d[i][j] = da[i][j];
        auto& db = b.diff(m);
        for (std::size_t i = 0; i < bw && !db.empty(); ++i)
            for (std::size_t j = 0; j < b.width(m + 1); ++j) d[aw + i][aw1 + j] = db[i][j];
        r.set_diff(m, std::move(d));
    }
    r.trim();
    return r;
}

std::vector<std::array<int, 3>> ProjComplex::summand_triples() const {
    std::vector<std::array<int, 3>> t;
    for (int m = lo(); m <= hi(); ++m)
        for (auto& s : summands(m)) t.push_back({m, s.v, s.q});
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<ProjComplex> ProjComplex::components() const {
    // union-find over summands, joined by nonzero differential entries
    std::vector<std::pair<int, std::size_t>> nodes; // (degree, index in degree)
    std::map<std::pair<int, std::size_t>, std::size_t> id;
    for (int m = lo(); m <= hi(); ++m)
        for (std::size_t i = 0; i < width(m); ++i) {
            id[{m, i}] = nodes.size();
            nodes.push_back({m, i});
        }
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int m = lo(); m < hi(); ++m) {
        auto& d = diff(m);
        for (std::size_t i = 0; i < width(m); ++i)
            for (std::size_t j = 0; j < width(m + 1); ++j)
                if (!d[i][j].is_zero()) {
                    auto a = find(id[{m, i}]), b = find(id[{m + 1, j}]);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t x = 0; x < nodes.size(); ++x) groups[find(x)].push_back(x);
    std::vector<ProjComplex> out;
    for (auto& [root, members] : groups) {
        // per-degree kept indices
        std::map<int, std::vector<std::size_t>> kept;
        for (auto x : members) kept[nodes[x].first].push_back(nodes[x].second);
        ProjComplex c(n_);
        int clo = kept.begin()->first, chi = kept.rbegin()->first;
        std::vector<std::vector<Summand>> degs;
        for (int m = clo; m <= chi; ++m) {
            std::vector<Summand> s;
            if (kept.count(m))
                for (auto i : kept[m]) s.push_back(summands(m)[i]);
            degs.push_back(std::move(s));
        }
        c.set_support(clo, std::move(degs));
        for (int m = clo; m < chi; ++m) {
            if (!kept.count(m) || !kept.count(m + 1)) continue;
            ZzMat d = zz_mat(kept[m].size(), kept[m + 1].size());
            auto& full = diff(m);
            for (std::size_t i = 0; i < kept[m].size(); ++i)
                for (std::size_t j = 0; j < kept[m + 1].size(); ++j)
                    d[i][j] = full[kept[m][i]][kept[m + 1][j]];
            c.set_diff(m, std::move(d));
        }
        c.trim();
        out.push_back(std::move(c));
    }
    return out;
}

std::string ProjComplex::key() const {
    std::ostringstream os;
    os << "n" << n_ << ";lo" << lo_ << ";";
    for (int m = lo(); m <= hi(); ++m) {
        os << "[" << m << ":";
        for (auto& s : summands(m)) os << "P" << s.v << "<" << s.q << ">";
        os << "]";
    }
    for (int m = lo(); m < hi(); ++m) {
        os << "{d" << m << ":";
        for (auto& row : diff(m)) {
            for (auto& e : row) os << e.str() << ",";
            os << ";";
        }
        os << "}";
    }
    return os.str();
}

nlohmann::json ProjComplex::to_json() const {
    nlohmann::json degrees = nlohmann::json::array();
    for (int m = lo(); m <= hi(); ++m) {
        nlohmann::json summs = nlohmann::json::array();
        for (auto& s : summands(m)) summs.push_back({{"i", s.v}, {"l", s.q}});
        nlohmann::json entry = {{"k", m}, {"summands", summs}};
        if (m < hi()) {
            nlohmann::json rows = nlohmann::json::array();
            for (auto& row : diff(m)) {
                nlohmann::json r = nlohmann::json::array();
                for (auto& e : row) r.push_back(e.str());
                rows.push_back(r);
            }
            entry["dnext"] = rows;
        }
        degrees.push_back(entry);
    }
    return {{"n", n_}, {"degrees", degrees}};
}

std::string ProjComplex::pretty() const {
    if (empty()) return "0";
    std::ostringstream os;
    for (int m = lo(); m <= hi(); ++m) {
        if (m > lo()) os << " -> ";
        os << "[" << m << ": ";
        bool first = true;
        for (auto& s : summands(m)) {
            if (!first) os << " + ";
            first = false;
            os << "P" << s.v;
            if (s.q != 0) os << "<" << s.q << ">";
        }
        if (summands(m).empty()) os << "0";
        os << "]";
    }
    return os.str();
}

ChainMap::ChainMap(ProjComplex src, ProjComplex dst) : src_(std::move(src)), dst_(std::move(dst)) {
    lo_ = std::min(src_.lo(), dst_.lo());
    int hi = std::max(src_.hi(), dst_.hi());
    if (src_.empty() && dst_.empty()) return;
    for (int m = lo_; m <= hi; ++m)
        blocks_.push_back(zz_mat(src_.width(m), dst_.width(m)));
}

ChainMap ChainMap::identity(const ProjComplex& x) {
    ChainMap f(x, x);
    for (int m = x.lo(); m <= x.hi(); ++m) {
        auto& b = f.block_mut(m);
        for (std::size_t i = 0; i < x.width(m); ++i)
            b[i][i] = ZigzagElement::idem(x.summands(m)[i].v);
    }
    return f;
}

ChainMap ChainMap::zero(const ProjComplex& x, const ProjComplex& y) { return {x, y}; }

const ZzMat& ChainMap::block(int m) const {
    int i = idx(m);
    if (i < 0 || i >= int(blocks_.size())) return kNoMat;
    return blocks_[i];
}

ZzMat& ChainMap::block_mut(int m) {
    int i = idx(m);
    if (i < 0 || i >= int(blocks_.size())) throw std::out_of_range("ChainMap::block_mut");
    return blocks_[i];
}

bool ChainMap::commutes() const {
    for (int m = std::min(src_.lo(), dst_.lo()); m <= std::max(src_.hi(), dst_.hi()); ++m) {
        // src.deg(m) -> dst.deg(m+1) two ways
        ZzMat via_dst = zz_mat(src_.width(m), dst_.width(m + 1));
        if (!block(m).empty() && !dst_.diff(m).empty())
            via_dst = zz_mat_mul(block(m), dst_.diff(m));
        ZzMat via_src = zz_mat(src_.width(m), dst_.width(m + 1));
        if (!src_.diff(m).empty() && !block(m + 1).empty())
            via_src = zz_mat_mul(src_.diff(m), block(m + 1));
        if (via_dst.size() != via_src.size()) continue;
        for (std::size_t i = 0; i < via_dst.size(); ++i)
            for (std::size_t j = 0; j < (via_dst.empty() ? 0 : via_dst[i].size()); ++j)
                if (via_dst[i][j] != via_src[i][j]) return false;
    }
    return true;
}

bool ChainMap::is_zero() const {
    for (auto& b : blocks_)
        if (!zz_mat_is_zero(b)) return false;
    return true;
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
    ChainMap r(f.src(), g.dst());
    for (int m = r.src().lo(); m <= r.src().hi(); ++m) {
        if (r.src().width(m) == 0 || r.dst().width(m) == 0) continue;
        if (f.dst().width(m) == 0) continue;
        r.block_mut(m) = zz_mat_mul(f.block(m), g.block(m));
    }
    return r;
}

ChainMap ChainMap::shifted(int k, int l) const {
    ChainMap r(src_.shifted(k, l), dst_.shifted(k, l));
    for (int m = src_.lo(); m <= src_.hi(); ++m) {
        if (src_.width(m) == 0 || dst_.width(m) == 0) continue;
        r.block_mut(m + k) = block(m);
    }
    return r;
}

Triangle cone(const ChainMap& f) {
    const ProjComplex& x = f.src();
    const ProjComplex& y = f.dst();
    if (x.n() != y.n() && !x.empty() && !y.empty())
        throw std::invalid_argument("cone: mismatched n");
    int n = x.empty() ? y.n() : x.n();
    ProjComplex c(n);
    int lo, hi;
    if (x.empty() && y.empty()) {
        lo = 0;
        hi = -1;
    } else if (x.empty()) {
        lo = y.lo();
        hi = y.hi();
    } else if (y.empty()) {
        lo = x.lo() - 1;
        hi = x.hi() - 1;
    } else {
        lo = std::min(y.lo(), x.lo() - 1);
        hi = std::max(y.hi(), x.hi() - 1);
    }
    std::vector<std::vector<Summand>> degs;
    for (int m = lo; m <= hi; ++m) {
        std::vector<Summand> s = y.summands(m);
        auto& xs = x.summands(m + 1);
        s.insert(s.end(), xs.begin(), xs.end());
        degs.push_back(std::move(s));
    }
    c.set_support(lo, std::move(degs));
    for (int m = lo; m < hi; ++m) {
        std::size_t yw = y.width(m), xw = x.width(m + 1);
        std::size_t yw1 = y.width(m + 1), xw1 = x.width(m + 2);
        ZzMat d = zz_mat(yw + xw, yw1 + xw1);
        auto& dy = y.diff(m);
        for (std::size_t i = 0; i < yw && !dy.empty(); ++i)
            for (std::size_t j = 0; j < yw1; ++j) d[i][j] = dy[i][j];
        auto& fb = f.block(m + 1);
        for (std::size_t i = 0; i < xw && !fb.empty(); ++i)
            for (std::size_t j = 0; j < yw1; ++j) d[yw + i][j] = fb[i][j];
        auto& dx = x.diff(m + 1);
        for (std::size_t i = 0; i < xw && !dx.empty(); ++i)
            for (std::size_t j = 0; j < xw1; ++j) d[yw + i][yw1 + j] = -dx[i][j];
        c.set_diff(m, std::move(d));
    }
    c.trim();

    Triangle t;
    t.cone = c;
    t.incl = ChainMap(y, c);
    for (int m = y.lo(); m <= y.hi(); ++m) {
        auto& b = t.incl.block_mut(m);
        for (std::size_t i = 0; i < y.width(m); ++i)
            b[i][i] = ZigzagElement::idem(y.summands(m)[i].v);
    }
    ProjComplex xs = x.shifted(-1, 0);
    t.proj = ChainMap(c, xs);
    for (int m = xs.lo(); m <= xs.hi(); ++m) {
        if (c.width(m) == 0 || xs.width(m) == 0) continue;
        auto& b = t.proj.block_mut(m);
        std::size_t yw = y.width(m);
        for (std::size_t i = 0; i < xs.width(m); ++i)
            b[yw + i][i] = ZigzagElement::idem(xs.summands(m)[i].v);
    }
    return t;
}

} // namespace zlkb
