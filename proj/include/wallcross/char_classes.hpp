#ifndef WALLCROSS_CHAR_CLASSES_HPP
#define WALLCROSS_CHAR_CLASSES_HPP

// Chern and Segre classes from Chern character data via Hessenberg determinants.

#include "wallcross/graded_ring.hpp"

#include <vector>

namespace wallcross {

// a[i-1] holds a_i = i! ch_i (pure degree 2i); missing entries count as zero.
struct ChernData {
    Rational rank = 0;
    std::vector<GradedElement> a;

    // a_i, or zero for i beyond the stored list.
    GradedElement component(int i, const ModelPtr& model) const;
};

// Splits a total Chern character into rank and the a_i = i! ch_i.
ChernData chern_data_from_ch(const GradedElement& ch);

// Total Chern character rank + sum a_i / i!.
GradedElement total_ch(const ChernData& data, const ModelPtr& model);

// c_n = det(H)/n! with a_1..a_n down the first column and n-1, ..., 1 on the
// superdiagonal.
GradedElement chern_from_ch(const ChernData& data, int n, const ModelPtr& model);

// s_n = det(H)/n! with (-1)^i a_i down the first column and -(n-1), ..., -1 on
// the superdiagonal.
GradedElement segre_from_ch(const ChernData& data, int n, const ModelPtr& model);

// 1 + c_1 + c_2 + ... up to the top degree of the model.
GradedElement total_chern(const ChernData& data, const ModelPtr& model);

// a_i -> (-1)^i a_i.
ChernData ch_dual(const ChernData& data);

ChernData ch_direct_sum(const ChernData& x, const ChernData& y);

// Largest n for which c_n or s_n can be nonzero in the model.
int max_class_index(const ModelSpec& model);

} // namespace wallcross

#endif
