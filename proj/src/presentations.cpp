#include "garside/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace garside {

namespace {

int fixed_rank(Family f) {
    switch (f) {
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
        case Family::F4: return 4;
        case Family::H3: return 3;
        case Family::H4: return 4;
        case Family::I2: return 2;
        default: return 0;
    }
}

[[noreturn]] void bad_spec(std::string_view text) {
    throw std::invalid_argument("unsupported monoid spec: " + std::string(text));
}

int parse_int(std::string_view digits, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) bad_spec(whole);
    return value;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::H3: return "H3";
        case Family::H4: return "H4";
        case Family::I2: return "I2";
    }
    return "?";
}

std::string MonoidSpec::to_string() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::I2: return "I2(" + std::to_string(p) + ")";
        default: return family_name(family);
    }
}

MonoidSpec MonoidSpec::make(Family family, int rank, int p) {
    MonoidSpec spec{family, rank, p};
    switch (family) {
        case Family::A:
        case Family::B:
            if (rank < 1) throw std::invalid_argument("rank must be >= 1");
            break;
        case Family::D:
            if (rank < 2) throw std::invalid_argument("family D requires rank >= 2");
            break;
        case Family::I2:
            spec.rank = 2;
            if (p < 2) throw std::invalid_argument("I2 requires p >= 2");
            break;
        default:
            spec.rank = fixed_rank(family);
            break;
    }
    if (family != Family::I2) spec.p = 0;
    return spec;
}

MonoidSpec MonoidSpec::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) bad_spec(text);
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    const std::string_view rest = std::string_view(s).substr(1);
    switch (letter) {
        case 'A': return make(Family::A, parse_int(rest, text));
        case 'B': return make(Family::B, parse_int(rest, text));
        case 'D': return make(Family::D, parse_int(rest, text));
        case 'E': {
            int r = parse_int(rest, text);
            if (r == 6) return make(Family::E6, 6);
            if (r == 7) return make(Family::E7, 7);
            if (r == 8) return make(Family::E8, 8);
            bad_spec(text);
        }
        case 'F':
            if (rest == "4") return make(Family::F4, 4);
            bad_spec(text);
        case 'H': {
            int r = parse_int(rest, text);
            if (r == 3) return make(Family::H3, 3);
            if (r == 4) return make(Family::H4, 4);
            bad_spec(text);
        }
        case 'I': {
            if (rest.size() < 4 || rest[0] != '2' || rest[1] != '(' || rest.back() != ')')
                bad_spec(text);
            return make(Family::I2, 2, parse_int(rest.substr(2, rest.size() - 3), text));
        }
        default: bad_spec(text);
    }
}

int CoxeterDiagram::label(int i, int j) const {
    for (const auto& e : edges)
        if ((e.a == i && e.b == j) || (e.a == j && e.b == i)) return e.label;
    return 2;
}

CoxeterDiagram CoxeterDiagram::for_spec(const MonoidSpec& spec) {
    const int n = spec.rank;
    CoxeterDiagram d;
    d.node_count = n;
    auto path = [&](int from, int to) {
        for (int i = from; i < to; ++i) d.edges.push_back({i, i + 1, 3});
    };
    switch (spec.family) {
        case Family::A:
            path(1, n);
            break;
        case Family::B:
            path(1, n - 1);
            if (n >= 2) d.edges.push_back({n - 1, n, 4});
            break;
        case Family::D:
            // D2 = Z x Z (no edges), D3 = A3 as the path 2-1-3.
            path(1, n - 1);
            if (n >= 3) d.edges.push_back({n - 2, n, 3});
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8:
            path(1, n - 1);
            d.edges.push_back({3, n, 3});
            break;
        case Family::F4:
            d.edges = {{1, 2, 3}, {2, 3, 4}, {3, 4, 3}};
            break;
        case Family::H3:
            d.edges = {{1, 2, 5}, {2, 3, 3}};
            break;
        case Family::H4:
            d.edges = {{1, 2, 5}, {2, 3, 3}, {3, 4, 3}};
            break;
        case Family::I2:
            if (spec.p >= 3) d.edges.push_back({1, 2, spec.p});
            break;
    }
    return d;
}

Presentation build_presentation(const MonoidSpec& spec) {
    const CoxeterDiagram diagram = CoxeterDiagram::for_spec(spec);
    Presentation pres;
    pres.atom_count = spec.rank;
    auto alternating = [](int first, int second, int length) {
        Presentation::Word w;
        w.reserve(length);
        for (int k = 0; k < length; ++k) w.push_back(k % 2 == 0 ? first : second);
        return w;
    };
    for (int i = 1; i <= spec.rank; ++i) {
        for (int j = i + 1; j <= spec.rank; ++j) {
            const int m = diagram.label(i, j);
            pres.relations.emplace_back(alternating(i, j, m), alternating(j, i, m));
        }
    }
    return pres;
}

std::int64_t positive_root_count(const MonoidSpec& c) {
    const std::int64_t m = c.rank;
    switch (c.family) {
        case Family::A: return m * (m + 1) / 2;
        case Family::B: return m * m;
        case Family::D: return m * (m - 1);
        case Family::E6: return 36;
        case Family::E7: return 63;
        case Family::E8: return 120;
        case Family::F4: return 24;
        case Family::H3: return 15;
        case Family::H4: return 60;
        case Family::I2: return c.p;
    }
    throw std::logic_error("positive_root_count: unknown family");
}

namespace {

[[noreturn]] void unrecognized_shape() {
    throw std::logic_error("induced subdiagram is not a recognized spherical shape");
}

MonoidSpec classify_tripod(const CoxeterDiagram& diagram, const std::vector<int>& nodes,
                           int center, const std::vector<std::vector<int>>& adj) {
    // Walk the three arms away from the unique degree-3 node.
    std::vector<int> arms;
    for (int start : adj[center]) {
        int length = 1;
        int prev = center, cur = start;
        while (true) {
            const auto& next = adj[cur];
            if (next.size() > 2) unrecognized_shape();
            int follow = -1;
            for (int cand : next)
                if (cand != prev) follow = cand;
            if (follow < 0) break;
            prev = cur;
            cur = follow;
            ++length;
        }
        arms.push_back(length);
    }
    for (int a : nodes)
        for (int b : nodes)
            if (a < b && diagram.label(a, b) > 3) unrecognized_shape();
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3 || arms[0] != 1) unrecognized_shape();
    if (arms[1] == 1) return MonoidSpec::make(Family::D, arms[2] + 3);
    if (arms[1] == 2 && arms[2] == 2) return MonoidSpec::make(Family::E6, 6);
    if (arms[1] == 2 && arms[2] == 3) return MonoidSpec::make(Family::E7, 7);
    if (arms[1] == 2 && arms[2] == 4) return MonoidSpec::make(Family::E8, 8);
    unrecognized_shape();
}

}  // namespace

MonoidSpec classify_component(const CoxeterDiagram& diagram, const std::vector<int>& nodes) {
    const int m = static_cast<int>(nodes.size());
    if (m == 1) return MonoidSpec::make(Family::A, 1);
    if (m == 2) {
        const int label = diagram.label(nodes[0], nodes[1]);
        if (label == 3) return MonoidSpec::make(Family::A, 2);
        if (label == 4) return MonoidSpec::make(Family::B, 2);
        if (label >= 5) return MonoidSpec::make(Family::I2, 2, label);
        unrecognized_shape();  // label 2 would mean a disconnected pair
    }

    // Node degrees within the component.
    std::vector<std::vector<int>> adj(diagram.node_count + 1);
    for (int a : nodes)
        for (int b : nodes)
            if (a != b && diagram.label(a, b) >= 3) adj[a].push_back(b);

    int branch = 0, branch_count = 0;
    std::vector<int> endpoints;
    for (int v : nodes) {
        if (adj[v].size() >= 3) {
            branch = v;
            ++branch_count;
            if (adj[v].size() > 3) unrecognized_shape();
        } else if (adj[v].size() == 1) {
            endpoints.push_back(v);
        } else if (adj[v].empty()) {
            unrecognized_shape();
        }
    }
    if (branch_count > 1) unrecognized_shape();
    if (branch_count == 1) return classify_tripod(diagram, nodes, branch, adj);

    // Path: walk it and collect the edge labels in order.
    if (endpoints.size() != 2) unrecognized_shape();
    std::vector<int> labels;
    int prev = -1, cur = endpoints[0];
    for (int step = 1; step < m; ++step) {
        int next = -1;
        for (int cand : adj[cur])
            if (cand != prev) next = cand;
        if (next < 0) unrecognized_shape();
        labels.push_back(diagram.label(cur, next));
        prev = cur;
        cur = next;
    }

    int big = 0, big_pos = -1;
    for (int k = 0; k < static_cast<int>(labels.size()); ++k) {
        if (labels[k] > 3) {
            if (big != 0) unrecognized_shape();
            big = labels[k];
            big_pos = k;
        }
    }
    const bool terminal = big_pos == 0 || big_pos == static_cast<int>(labels.size()) - 1;
    if (big == 0) return MonoidSpec::make(Family::A, m);
    if (big == 4 && terminal) return MonoidSpec::make(Family::B, m);
    if (big == 4 && m == 4) return MonoidSpec::make(Family::F4, 4);
    if (big == 5 && terminal && m == 3) return MonoidSpec::make(Family::H3, 3);
    if (big == 5 && terminal && m == 4) return MonoidSpec::make(Family::H4, 4);
    unrecognized_shape();
}

ParabolicInfo lcm_length(const MonoidSpec& spec, const std::vector<int>& subset) {
    const CoxeterDiagram diagram = CoxeterDiagram::for_spec(spec);
    ParabolicInfo info;
    info.subset = subset;
    std::sort(info.subset.begin(), info.subset.end());
    info.subset.erase(std::unique(info.subset.begin(), info.subset.end()), info.subset.end());
    for (int a : info.subset)
        if (a < 1 || a > spec.rank)
            throw std::invalid_argument("lcm_length: atom index outside 1.." +
                                        std::to_string(spec.rank));

    std::vector<int> pending = info.subset;
    while (!pending.empty()) {
        // Flood-fill the component of the smallest pending atom.
        std::vector<int> component{pending.front()};
        std::vector<int> stack{pending.front()};
        auto in_pending = [&](int v) {
            return std::find(pending.begin(), pending.end(), v) != pending.end();
        };
        pending.erase(pending.begin());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (std::size_t idx = 0; idx < pending.size();) {
                if (diagram.label(v, pending[idx]) >= 3) {
                    component.push_back(pending[idx]);
                    stack.push_back(pending[idx]);
                    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(idx));
                } else {
                    ++idx;
                }
            }
        }
        std::sort(component.begin(), component.end());
        MonoidSpec piece = classify_component(diagram, component);
        info.lcm_length += positive_root_count(piece);
        info.components.push_back(piece);
    }
    return info;
}

}  // namespace garside
