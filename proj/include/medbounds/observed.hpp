#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace medbounds {

inline constexpr int kCells = 16;
inline constexpr double kNormalizationTol = 1e-9;

/// Flat index of the cell (Y=y, M1=m1, M2=m2 | X=x). Arm-0 cells occupy
/// indices 0..7, arm-1 cells 8..15; within an arm the order is (y, m1, m2).
constexpr int cell_index(int y, int m1, int m2, int x) {
    return (x << 3) | (y << 2) | (m1 << 1) | m2;
}

/// The 16 estimable probabilities p(Y=y, M1=m1, M2=m2 | X=x).
class ObservedDistribution {
public:
    ObservedDistribution() : cells_{} {}
    explicit ObservedDistribution(const std::array<double, kCells>& cells) : cells_(cells) {}

    static ObservedDistribution uniform();

    double p(int y, int m1, int m2, int x) const { return cells_[cell_index(y, m1, m2, x)]; }
    void set(int y, int m1, int m2, int x, double value) {
        cells_[cell_index(y, m1, m2, x)] = value;
    }

    const std::array<double, kCells>& cells() const { return cells_; }

    double arm_sum(int x) const;

private:
    std::array<double, kCells> cells_;
};

/// One trial record; all fields are 0/1.
struct Record {
    std::uint8_t x, m1, m2, y;
};

/// Raw trial records plus per-arm sizes.
class RecordTable {
public:
    RecordTable() = default;
    explicit RecordTable(std::vector<Record> rows) : rows_(std::move(rows)) {}

    void add(int x, int m1, int m2, int y);

    const std::vector<Record>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    std::size_t arm_size(int x) const;
    /// Cell counts for one arm, indexed by 4y + 2m1 + m2.
    std::array<long, 8> arm_counts(int x) const;

private:
    std::vector<Record> rows_;
};

/// Checks the per-cell range and per-arm normalization invariants.
/// Throws NegativeProbability or ArmNotNormalized; returns the input on success.
const ObservedDistribution& validate(const ObservedDistribution& dist);

/// Plug-in cell proportions, one denominator per arm. Throws EmptyArm.
ObservedDistribution estimate_distribution(const RecordTable& records);

/// p(Y=1|X=1) - p(Y=1|X=0); identified under randomization.
double total_effect(const ObservedDistribution& dist);

}  // namespace medbounds
