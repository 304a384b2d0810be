#ifndef WHITEALG_HOMOTOPY_MODEL_HPP
#define WHITEALG_HOMOTOPY_MODEL_HPP

#include <string>
#include <vector>

#include "whitealg/lie_element.hpp"
#include "whitealg/lyndon.hpp"

namespace whitealg {

// A truncated Whitehead algebra: generators x_1..x_n retained, layers up to
// the Samelson degree of x_n. The Lyndon basis of each layer is declared a
// Z-basis of homotopy modulo torsion in Z-lattice mode.
class TruncatedAlgebra {
public:
    TruncatedAlgebra(const GeneratorSchedule& schedule, int top_index, RingMode ring);

    const GeneratorSchedule& schedule() const { return schedule_; }
    int top_index() const { return top_index_; }
    RingMode ring() const { return ring_; }
    int degree_cap() const { return degree_cap_; }
    bool empty() const { return top_index_ == 0; }

    // Lyndon basis of the layer; degree must not exceed the cap.
    std::vector<HallBasisElement> basis(int samelson_degree) const;

    bool operator==(const TruncatedAlgebra& o) const {
        return schedule_ == o.schedule_ && top_index_ == o.top_index_ && ring_ == o.ring_;
    }

private:
    GeneratorSchedule schedule_;  // truncated to top_index generators
    int top_index_;
    RingMode ring_;
    int degree_cap_;
};

struct RankTableRow {
    int whitehead_dim = 0;
    int rank = 0;
    std::vector<std::string> basis_expressions;

    bool operator==(const RankTableRow&) const = default;
};

GeneratorSchedule make_schedule(Family family, int generator_count,
                                int degree_cap = kDefaultDegreeCap);

// One row per Whitehead dimension with nonzero rank, up to and including
// max_whitehead_dim. rank at dimension d is the Lyndon rank in Samelson
// degree d-1.
std::vector<RankTableRow> whitehead_rank_table(const GeneratorSchedule& schedule,
                                               int max_whitehead_dim);

TruncatedAlgebra truncated_algebra(const GeneratorSchedule& schedule, int top_index, RingMode ring);

// I_n = the single indecomposable generator x_n; D_n = the bracket words of
// the same layer.
struct LayerSplit {
    std::vector<HallBasisElement> indecomposables;
    std::vector<HallBasisElement> decomposables;
};
LayerSplit indecomposables_and_decomposables(const TruncatedAlgebra& algebra, int n);

}  // namespace whitealg

#endif
