#include "whitealg/homotopy_model.hpp"

#include "whitealg/format.hpp"

namespace whitealg {

TruncatedAlgebra::TruncatedAlgebra(const GeneratorSchedule& schedule, int top_index, RingMode ring)
    : schedule_(schedule.truncate(top_index)),  // validates the index
      top_index_(top_index),
      ring_(ring),
      degree_cap_(top_index == 0 ? 0 : schedule.samelson_degree(top_index)) {
    // the truncation defines its own scope: all layers up to deg x_top exist
    if (degree_cap_ > schedule_.degree_cap())
        schedule_ = schedule_.with_degree_cap(degree_cap_);
}

std::vector<HallBasisElement> TruncatedAlgebra::basis(int samelson_degree) const {
    if (samelson_degree > degree_cap_)
        fail(Errc::DegreeCapExceeded, "layer " + std::to_string(samelson_degree) +
                                          " lies above the truncation at " +
                                          std::to_string(degree_cap_));
    return lyndon_basis(schedule_, samelson_degree);
}

GeneratorSchedule make_schedule(Family family, int generator_count, int degree_cap) {
    switch (family) {
        case Family::HP: return GeneratorSchedule::hp(generator_count, degree_cap);
        case Family::CP: return GeneratorSchedule::cp(generator_count, degree_cap);
        case Family::RP: return GeneratorSchedule::rp(degree_cap);
        case Family::Custom:
            fail(Errc::OddParityUnsupported,
                 "custom schedules need an explicit degree list; use GeneratorSchedule::custom");
    }
    fail(Errc::OddParityUnsupported, "unreachable family");
}

std::vector<RankTableRow> whitehead_rank_table(const GeneratorSchedule& schedule,
                                               int max_whitehead_dim) {
    if (max_whitehead_dim - 1 > schedule.degree_cap())
        fail(Errc::DegreeCapExceeded,
             "rank table to Whitehead dimension " + std::to_string(max_whitehead_dim) +
                 " exceeds the Samelson cap " + std::to_string(schedule.degree_cap()));
    std::vector<RankTableRow> rows;
    for (int dim = 1; dim <= max_whitehead_dim; ++dim) {
        std::vector<HallBasisElement> basis = lyndon_basis(schedule, dim - 1);
        if (basis.empty()) continue;
        RankTableRow row;
        row.whitehead_dim = dim;
        row.rank = static_cast<int>(basis.size());
        for (const HallBasisElement& b : basis)
            row.basis_expressions.push_back(format_basis_element(schedule, b.word));
        rows.push_back(std::move(row));
    }
    return rows;
}

TruncatedAlgebra truncated_algebra(const GeneratorSchedule& schedule, int top_index,
                                   RingMode ring) {
    return TruncatedAlgebra(schedule, top_index, ring);
}

LayerSplit indecomposables_and_decomposables(const TruncatedAlgebra& algebra, int n) {
    if (n < 1 || n > algebra.top_index())
        fail(Errc::IndexOutOfRange, "layer index " + std::to_string(n) +
                                        " outside truncation at " +
                                        std::to_string(algebra.top_index()));
    LayerSplit split;
    int degree = algebra.schedule().samelson_degree(n);
    for (HallBasisElement& b : algebra.basis(degree)) {
        if (b.length() == 1)
            split.indecomposables.push_back(std::move(b));
        else
            split.decomposables.push_back(std::move(b));
    }
    return split;
}

}  // namespace whitealg
