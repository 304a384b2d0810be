#ifndef WHITEALG_SCHEDULE_HPP
#define WHITEALG_SCHEDULE_HPP

#include <memory>
#include <string>
#include <vector>

#include "whitealg/errors.hpp"

namespace whitealg {

enum class Family { HP, CP, RP, Custom };

enum class RingMode { ZLattice, Q };

constexpr int kDefaultDegreeCap = 60;

struct Generator {
    std::string name;      // canonical print name: x<i>, or xi<whitehead degree> for CP
    int whitehead_degree;  // degree of the suspension class
    int samelson_degree;   // whitehead_degree - 1; the internal grading

    bool operator==(const Generator&) const = default;
};

// Ordered list of free generators with their degrees. Immutable; copies are
// cheap (shared data). Only even Samelson degrees are supported: odd parity
// would require a super-Lyndon basis and is rejected at construction.
class GeneratorSchedule {
public:
    // HP: whitehead degrees 5, 9, ..., 4k+1.  CP: 3, 5, ..., 2k+1.  RP: empty.
    static GeneratorSchedule hp(int generator_count, int degree_cap = kDefaultDegreeCap);
    static GeneratorSchedule cp(int generator_count, int degree_cap = kDefaultDegreeCap);
    static GeneratorSchedule rp(int degree_cap = kDefaultDegreeCap);
    // Strictly increasing even Samelson degrees; generators named x1..xk.
    static GeneratorSchedule custom(const std::vector<int>& samelson_degrees,
                                    int degree_cap = kDefaultDegreeCap);

    Family family() const { return d_->family; }
    int size() const { return static_cast<int>(d_->gens.size()); }
    int degree_cap() const { return d_->degree_cap; }

    const Generator& generator(int index) const;  // 1-based
    int samelson_degree(int index) const { return generator(index).samelson_degree; }
    int whitehead_degree(int index) const { return generator(index).whitehead_degree; }

    // 0 if no generator carries that name.
    int index_of_name(const std::string& name) const;

    // First `count` generators, same family and cap.
    GeneratorSchedule truncate(int count) const;
    GeneratorSchedule with_degree_cap(int cap) const;

    bool operator==(const GeneratorSchedule& other) const {
        return d_ == other.d_ || (d_->family == other.d_->family && d_->gens == other.d_->gens &&
                                  d_->degree_cap == other.d_->degree_cap);
    }

    void check_same(const GeneratorSchedule& other) const {
        if (!(*this == other)) fail(Errc::MixedSchedules, "operands built over different schedules");
    }

    void check_degree(int samelson_degree) const {
        if (samelson_degree > degree_cap())
            fail(Errc::DegreeCapExceeded, "Samelson degree " + std::to_string(samelson_degree) +
                                              " exceeds cap " + std::to_string(degree_cap()));
    }

private:
    struct Data {
        Family family;
        std::vector<Generator> gens;
        int degree_cap;
    };
    explicit GeneratorSchedule(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    static GeneratorSchedule make(Family family, std::vector<Generator> gens, int degree_cap);

    std::shared_ptr<const Data> d_;
};

const char* family_name(Family f);
Family family_from_name(const std::string& s);

}  // namespace whitealg

#endif
