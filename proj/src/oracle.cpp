#include "garside/oracle.hpp"

#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace garside {

std::uint64_t default_oracle_budget() {
    if (const char* env = std::getenv("GARSIDE_ORACLE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000;
}

namespace {

// Words are byte strings, one atom index per byte; byte order matches the
// atom order, so std::string comparison is the lexicographic order on words.
using Word = std::string;

struct Rule {
    Word from;
    Word to;
};

std::vector<Rule> rewrite_rules(const MonoidSpec& spec) {
    std::vector<Rule> rules;
    for (const auto& [lhs, rhs] : build_presentation(spec).relations) {
        Word a(lhs.begin(), lhs.end());
        Word b(rhs.begin(), rhs.end());
        rules.push_back({a, b});
        rules.push_back({b, a});
    }
    return rules;
}

std::uint64_t checked_word_count(int atoms, int k, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > budget / static_cast<std::uint64_t>(atoms))
            throw std::invalid_argument("oracle: atom_count^k exceeds the word budget of " +
                                        std::to_string(budget));
        total *= static_cast<std::uint64_t>(atoms);
    }
    if (total > budget)
        throw std::invalid_argument("oracle: atom_count^k exceeds the word budget of " +
                                    std::to_string(budget));
    return total;
}

}  // namespace

std::vector<WordClass> enumerate_classes(const MonoidSpec& spec, int k, std::uint64_t budget) {
    if (k < 0) throw std::invalid_argument("enumerate_classes: need k >= 0");
    if (budget == 0) budget = default_oracle_budget();
    const int atoms = spec.atom_count();
    checked_word_count(atoms, k, budget);

    if (k == 0) return {WordClass{{}, 1, 0}};

    const std::vector<Rule> rules = rewrite_rules(spec);
    std::vector<WordClass> classes;
    std::unordered_set<Word> visited;

    Word seed(static_cast<std::size_t>(k), static_cast<char>(1));
    while (true) {
        if (!visited.contains(seed)) {
            // Close the seed under all rewrites; the class's lex-representative
            // is the maximum over the fully explored class.
            std::queue<Word> frontier;
            frontier.push(seed);
            visited.insert(seed);
            Word best = seed;
            std::uint64_t size = 0;
            while (!frontier.empty()) {
                Word w = std::move(frontier.front());
                frontier.pop();
                ++size;
                if (w > best) best = w;
                for (const auto& rule : rules) {
                    if (rule.from.size() > w.size()) continue;
                    for (std::size_t pos = 0; pos + rule.from.size() <= w.size(); ++pos) {
                        if (w.compare(pos, rule.from.size(), rule.from) != 0) continue;
                        Word next = w;
                        next.replace(pos, rule.from.size(), rule.to);
                        if (next.size() != w.size())
                            throw std::logic_error("oracle: relation changed word length");
                        if (visited.insert(next).second) frontier.push(std::move(next));
                    }
                }
            }
            WordClass cls;
            cls.canonical.assign(best.begin(), best.end());
            cls.class_size = size;
            cls.length = k;
            classes.push_back(std::move(cls));
        }
        // Next word in lexicographic order.
        int pos = k - 1;
        while (pos >= 0 && seed[static_cast<std::size_t>(pos)] == static_cast<char>(atoms)) {
            seed[static_cast<std::size_t>(pos)] = static_cast<char>(1);
            --pos;
        }
        if (pos < 0) break;
        ++seed[static_cast<std::size_t>(pos)];
    }
    return classes;
}

std::vector<std::uint64_t> count_by_first_letter(const MonoidSpec& spec, int k,
                                                 std::uint64_t budget) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(spec.atom_count()), 0);
    for (const auto& cls : enumerate_classes(spec, k, budget)) {
        if (cls.canonical.empty()) continue;
        ++counts[static_cast<std::size_t>(cls.canonical.front()) - 1];
    }
    return counts;
}

std::uint64_t count_theta_term(int k, std::uint64_t budget) {
    if (k < 0) throw std::invalid_argument("count_theta_term: need k >= 0");
    if (k == 0) return 1;  // the empty braid
    const MonoidSpec spec = MonoidSpec::make(Family::A, k < 1 ? 1 : k);
    return count_by_first_letter(spec, k, budget).front();
}

}  // namespace garside
