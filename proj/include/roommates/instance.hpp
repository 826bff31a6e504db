#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "roommates/rng.hpp"

namespace roommates {

/// Persons and ranks are 1-based everywhere; rank n of person x is
/// always x itself (the self-sentinel), so "matched with self" encodes
/// running out of partners.
using PersonId = std::int32_t;
using Rank = std::int32_t;

enum class SolvePhase { one, two };

/// Per-oracle instrumentation. All counts are monotone during a solve.
///
/// getdata_calls splits exactly into phase1_reads + phase2_reads (the
/// calls issued while the owning solve was in phase I resp. phase II).
/// entries_created counts fresh list-position disclosures; each one
/// reveals two preference-table elements (the queried position and the
/// reciprocal rank) and adds four map entries on the lazy oracle.
/// phase1_entries is the share of entries_created disclosed in phase I.
struct Counters {
    std::uint64_t getdata_calls = 0;
    std::uint64_t entries_created = 0;
    std::uint64_t phase1_reads = 0;
    std::uint64_t phase2_reads = 0;
    std::uint64_t phase1_entries = 0;
    std::uint64_t peak_map_entries = 0;
};

/// Fully materialized preference tables: person_table maps (person,
/// rank) -> person and rank_table maps (person, person) -> rank; the
/// two are mutually inverse per row.
class ExplicitPreferences {
public:
    /// Independent uniform random lists for every person: a uniform
    /// permutation of the other n-1 persons followed by self at rank n.
    /// Identical (n, seed) yields identical tables.
    static ExplicitPreferences random(int n, std::uint64_t seed);

    /// Builds tables from per-person lists that exclude self; the
    /// sentinel is appended internally. Throws std::invalid_argument
    /// if any list is not a permutation of {1..n}\{x}.
    static ExplicitPreferences from_lists(
        int n, const std::vector<std::vector<PersonId>>& lists);

    int size() const { return n_; }
    PersonId person_at(PersonId x, Rank i) const { return person_[idx(x, i)]; }
    Rank rank_of(PersonId x, PersonId y) const { return rank_[idx(x, y)]; }

    bool operator==(const ExplicitPreferences&) const = default;

private:
    ExplicitPreferences(int n) : n_(n), person_(std::size_t(n + 1) * (n + 1)),
                                 rank_(std::size_t(n + 1) * (n + 1)) {}
    std::size_t idx(int x, int i) const { return std::size_t(x) * (n_ + 1) + i; }
    void set_pair(PersonId x, Rank i, PersonId y) {
        person_[idx(x, i)] = y;
        rank_[idx(x, y)] = i;
    }
    friend ExplicitPreferences materialize_into(class PreferenceOracle&);

    int n_;
    std::vector<PersonId> person_;  // (n+1)x(n+1), row/col 0 unused
    std::vector<Rank> rank_;
};

/// Query interface shared by the eager and lazy tables. get_data(x, i)
/// returns (y, r): y is the person at rank i of x's list, r is x's rank
/// in y's list. One oracle instance is owned by one solve at a time;
/// distinct oracles can be used in parallel freely.
class PreferenceOracle {
public:
    virtual ~PreferenceOracle() = default;

    virtual std::pair<PersonId, Rank> get_data(PersonId x, Rank i) = 0;
    virtual int size() const = 0;

    /// Phase tag used to attribute subsequent get_data calls.
    void set_phase(SolvePhase p) { phase_ = p; }
    const Counters& counters() const { return counters_; }
    void reset_counters(std::uint64_t initial_map_entries = 0) {
        counters_ = Counters{};
        counters_.peak_map_entries = initial_map_entries;
    }

protected:
    void record_call() {
        ++counters_.getdata_calls;
        if (phase_ == SolvePhase::one)
            ++counters_.phase1_reads;
        else
            ++counters_.phase2_reads;
    }
    void record_disclosure() {
        ++counters_.entries_created;
        if (phase_ == SolvePhase::one) ++counters_.phase1_entries;
        counters_.peak_map_entries += 4;  // entries are never removed
    }

    Counters counters_;
    SolvePhase phase_ = SolvePhase::one;
};

/// Table-backed oracle; get_data is a pure lookup.
class EagerOracle final : public PreferenceOracle {
public:
    explicit EagerOracle(const ExplicitPreferences& prefs) : prefs_(&prefs) {}

    std::pair<PersonId, Rank> get_data(PersonId x, Rank i) override;
    int size() const override { return prefs_->size(); }

private:
    const ExplicitPreferences* prefs_;
};

/// Generates preference-list entries on demand. Each person x starts
/// with only the sentinel pair person[x][n]=x, rank[x][x]=n; a query
/// for an undisclosed position draws the person and the reciprocal
/// rank by rejection sampling (redraw on collision) and stores the
/// four resulting map entries. Disclosed entries never change, so
/// identical (n, seed, query sequence) yields identical responses.
class LazyOracle final : public PreferenceOracle {
public:
    LazyOracle(int n, std::uint64_t seed);

    std::pair<PersonId, Rank> get_data(PersonId x, Rank i) override;
    int size() const override { return n_; }

    /// Map families, exposed for tests of the mutual-inverse invariant.
    const std::unordered_map<Rank, PersonId>& person_map(PersonId x) const {
        return person_maps_[x];
    }
    const std::unordered_map<PersonId, Rank>& rank_map(PersonId x) const {
        return rank_maps_[x];
    }

private:
    int n_;
    std::vector<std::unordered_map<Rank, PersonId>> person_maps_;
    std::vector<std::unordered_map<PersonId, Rank>> rank_maps_;
    Engine rng_;
};

/// Testing aid: discloses every position of the oracle and returns the
/// completed tables. Queries follow `order` first (pairs (x, i)), then
/// row-major for anything not yet requested; on a fully disclosed
/// oracle this is pure replay, so repeated calls agree.
ExplicitPreferences materialize(PreferenceOracle& oracle);
ExplicitPreferences materialize(PreferenceOracle& oracle,
                                std::span<const std::pair<PersonId, Rank>> order);

/// Text format: line 1 holds n; line x+1 holds person x's list of the
/// other n-1 persons, most preferred first. The self-sentinel is never
/// written to files and is re-added on load.
ExplicitPreferences parse_instance(std::string_view text);
std::string serialize_instance(const ExplicitPreferences& prefs);

}  // namespace roommates
