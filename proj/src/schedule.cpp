#include "whitealg/schedule.hpp"

namespace whitealg {

GeneratorSchedule GeneratorSchedule::make(Family family, std::vector<Generator> gens,
                                          int degree_cap) {
    for (size_t i = 0; i < gens.size(); ++i) {
        const Generator& g = gens[i];
        if (g.samelson_degree % 2 != 0 || g.samelson_degree <= 0)
            fail(Errc::OddParityUnsupported,
                 "generator " + g.name + " has Samelson degree " +
                     std::to_string(g.samelson_degree) + "; only positive even degrees supported");
        if (g.whitehead_degree != g.samelson_degree + 1)
            fail(Errc::DegreeMismatch, "generator " + g.name + " violates whitehead = samelson + 1");
        if (i > 0 && gens[i - 1].whitehead_degree >= g.whitehead_degree)
            fail(Errc::DegreeMismatch, "whitehead degrees must strictly increase");
        for (size_t j = 0; j < i; ++j)
            if (gens[j].name == g.name)
                fail(Errc::DegreeMismatch, "duplicate generator name " + g.name);
    }
    auto d = std::make_shared<Data>();
    d->family = family;
    d->gens = std::move(gens);
    d->degree_cap = degree_cap;
    return GeneratorSchedule(std::move(d));
}

GeneratorSchedule GeneratorSchedule::hp(int generator_count, int degree_cap) {
    std::vector<Generator> gens;
    gens.reserve(generator_count);
    for (int i = 1; i <= generator_count; ++i)
        gens.push_back({"x" + std::to_string(i), 4 * i + 1, 4 * i});
    return make(Family::HP, std::move(gens), degree_cap);
}

GeneratorSchedule GeneratorSchedule::cp(int generator_count, int degree_cap) {
    std::vector<Generator> gens;
    gens.reserve(generator_count);
    for (int i = 1; i <= generator_count; ++i)
        gens.push_back({"xi" + std::to_string(2 * i + 1), 2 * i + 1, 2 * i});
    return make(Family::CP, std::move(gens), degree_cap);
}

GeneratorSchedule GeneratorSchedule::rp(int degree_cap) {
    return make(Family::RP, {}, degree_cap);
}

GeneratorSchedule GeneratorSchedule::custom(const std::vector<int>& samelson_degrees,
                                            int degree_cap) {
    std::vector<Generator> gens;
    gens.reserve(samelson_degrees.size());
    for (size_t i = 0; i < samelson_degrees.size(); ++i) {
        int d = samelson_degrees[i];
        gens.push_back({"x" + std::to_string(i + 1), d + 1, d});
    }
    return make(Family::Custom, std::move(gens), degree_cap);
}

const Generator& GeneratorSchedule::generator(int index) const {
    if (index < 1 || index > size())
        fail(Errc::UnknownGenerator, "generator index " + std::to_string(index) +
                                         " outside schedule of size " + std::to_string(size()));
    return d_->gens[index - 1];
}

int GeneratorSchedule::index_of_name(const std::string& name) const {
    for (int i = 1; i <= size(); ++i)
        if (d_->gens[i - 1].name == name) return i;
    return 0;
}

GeneratorSchedule GeneratorSchedule::truncate(int count) const {
    if (count < 0 || count > size())
        fail(Errc::IndexOutOfRange, "cannot truncate schedule of size " + std::to_string(size()) +
                                        " to " + std::to_string(count));
    std::vector<Generator> gens(d_->gens.begin(), d_->gens.begin() + count);
    return make(d_->family, std::move(gens), d_->degree_cap);
}

GeneratorSchedule GeneratorSchedule::with_degree_cap(int cap) const {
    return make(d_->family, d_->gens, cap);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::HP: return "hp";
        case Family::CP: return "cp";
        case Family::RP: return "rp";
        case Family::Custom: return "custom";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "hp") return Family::HP;
    if (s == "cp") return Family::CP;
    if (s == "rp") return Family::RP;
    if (s == "custom") return Family::Custom;
    fail(Errc::SchemaMismatch, "unknown family '" + s + "'");
}

}  // namespace whitealg
