#include "fanok3/paper_data.hpp"

#include <stdexcept>

namespace fanok3::data {

namespace {

void check_k(int k, int lo = 1, int hi = 18) {
    if (k < lo || k > hi) throw std::invalid_argument("k out of range");
}

Rat q(long n, long d) { return rat(n, d); }

}  // namespace

int vertex_count(int k) {
    check_k(k);
    static const int counts[] = {0, 4, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 8, 8};
    return counts[k];
}

std::vector<std::array<long, 3>> polytope_vertices(int k) {
    check_k(k);
    switch (k) {
        case 1: return {{1,0,0},{0,1,0},{0,0,1},{-1,-1,-1}};
        case 2: return {{1,0,0},{0,1,0},{0,0,1},{-1,-1,0},{0,0,-1}};
        case 3: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{-1,-1,-1}};
        case 4: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{-1,-1,-2}};
        case 5: return {{1,0,0},{0,1,0},{0,0,1},{-1,-1,0},{-1,-1,-1}};
        case 6: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{0,-1,0},{-1,0,0}};
        case 7: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{0,-1,-1},{-1,0,-1}};
        case 8: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{0,-1,1},{-1,0,-1}};
        case 9: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{0,-1,0},{-1,-1,0}};
        case 10: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{0,-1,-1},{-1,-1,-1}};
        case 11: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{0,1,-1},{-1,-1,-1}};
        case 12: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{0,1,-1},{-1,-1,0}};
        case 13: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{0,-1,0},{-1,0,0},{-1,-1,0}};
        case 14: return {{1,0,0},{0,1,0},{0,0,1},{-1,0,-1},{0,-1,0},{-1,0,0},{-1,-1,0}};
        case 15: return {{1,0,0},{0,1,0},{0,0,1},{1,0,-1},{0,-1,0},{-1,0,0},{-1,-1,0}};
        case 16: return {{1,0,0},{0,1,0},{0,0,1},{-1,-1,-1},{0,-1,0},{-1,0,0},{-1,-1,0}};
        case 17: return {{1,0,0},{0,1,0},{0,0,1},{0,0,-1},{0,-1,0},{-1,0,0},{1,-1,0},{-1,1,0}};
        case 18: return {{1,0,0},{0,1,0},{0,0,1},{1,-1,-1},{0,-1,0},{-1,0,0},{1,-1,0},{-1,1,0}};
    }
    return {};
}

GramLattice lattice_Lk(int k) {
    check_k(k);
    std::vector<std::vector<long>> g;
    switch (k) {
        case 1: g = {{4}}; break;
        case 2: g = {{0,3},{3,2}}; break;
        case 3: g = {{-2,2},{2,-2}}; break;
        case 4: g = {{-2,1},{1,-2}}; break;
        case 5: g = {{0,3},{3,-2}}; break;
        case 6: g = {{0,2,2},{2,0,2},{2,2,0}}; break;
        case 7: g = {{-2,1,1},{1,0,2},{1,2,0}}; break;
        case 8: g = {{-2,1,3},{1,0,2},{3,2,0}}; break;
        case 9: g = {{0,1,2},{1,-2,2},{2,2,0}}; break;
        case 10: g = {{-2,1,1},{1,-2,2},{1,2,0}}; break;
        case 11: g = {{-2,1,1},{1,-2,1},{1,1,2}}; break;
        case 12: g = {{-2,2,2},{2,-2,1},{2,1,2}}; break;
        case 13: g = {{0,1,1,1},{1,-2,0,2},{1,0,-2,2},{1,2,2,-2}}; break;
        case 14: g = {{0,1,1,1},{1,-2,0,2},{1,0,-2,1},{1,2,1,-2}}; break;
        case 15: g = {{0,1,1,1},{1,-2,0,2},{1,0,-2,3},{1,2,3,-2}}; break;
        case 16: g = {{0,1,1,1},{1,-2,0,1},{1,0,-2,1},{1,1,1,-2}}; break;
        case 17: g = {{0,1,1,1,1},{1,-2,2,2,0},{1,2,-2,0,2},{1,2,0,-2,0},{1,0,2,0,-2}}; break;
        case 18: g = {{0,1,1,1,1},{1,-2,2,1,0},{1,2,-2,0,3},{1,1,0,-2,0},{1,0,3,0,-2}}; break;
    }
    std::vector<std::string> lab;
    for (size_t i = 1; i <= g.size(); ++i) lab.push_back("v" + std::to_string(i));
    return make_lattice(g, lab);
}

std::string equation_string(int k) {
    check_k(k, 6, 18);
    switch (k) {
        case 6:  return "x*y*z*(x + y + z + 1) + l1*x*y + l2*x*z + l3*y*z";
        case 7:  return "x*y*z*(x + y + z + 1) + l1*x*y + l2*x + l3*y";
        case 8:  return "x*y*z*(x + y + z + 1) + l1*x*y + l2*x*z^2 + l3*y";
        case 9:  return "x*y*z*(x + y + z + 1) + l1*x*y + l2*x*z + l3*z";
        case 10: return "x*y*z*(x + y + z + 1) + l1*x*y + l2*x + l3";
        case 11: return "x*y*z*(x + y + z + 1) + l1*x*y + l2*x*y^2 + l3";
        case 12: return "x*y*z*(x + y + z + 1) + l1*x*y + l2*x*y^2 + l3*z";
        case 13: return "x*y*z*(x + y + z + 1) + l1*x*y + l2*x*z + l3*y*z + l4*z";
        case 14: return "x*y*z*(x + y + z + 1) + l1*y + l2*x*z + l3*y*z + l4*z";
        case 15: return "x*y*z*(x + y + z + 1) + l1*x^2*y + l2*x*z + l3*y*z + l4*z";
        case 16: return "x*y*z*(x + y + z + 1) + l1 + l2*x*z + l3*y*z + l4*z";
        case 17: return "x*y*z*(x + y + z + 1) + l1*x*y + l2*y*z + l3*x*z + l4*x^2*z + l5*y^2*z";
        case 18: return "x*y*z*(x + y + z + 1) + l1*x^2 + l2*y*z + l3*x*z + l4*x^2*z + l5*y^2*z";
    }
    return {};
}

std::vector<int> lambda_assignment(int k) {
    check_k(k, 6, 18);
    int n = vertex_count(k) - 3;
    std::vector<int> a;
    for (int i = 1; i <= n; ++i) a.push_back(i);
    if (k == 17 || k == 18) std::swap(a[1], a[2]);
    return a;
}

FiberExpectation fiber_expectation(int k) {
    check_k(k, 6, 18);
    switch (k) {
        case 6:  return {{"I8", "I8"}, 8};
        case 7:  return {{"I3*", "I8"}, 7};
        case 8:  return {{"I1*", "I3", "I8"}, 6};
        case 9:  return {{"I6", "I10"}, 8};
        case 10: return {{"I5", "I11"}, 8};
        case 11: return {{"IV*", "I9"}, 7};
        case 12: return {{"I6", "I3", "I9"}, 6};
        case 13: return {{"I6", "I2", "I8"}, 8};
        case 14: return {{"I7", "I8"}, 9};
        case 15: return {{"I5", "I3", "I8"}, 8};
        case 16: return {{"I5", "I10"}, 9};
        case 17: return {{"I6", "I2", "I2", "I6"}, 8};
        case 18: return {{"I7", "I3", "I5"}, 9};
    }
    return {};
}

int evident_rank(int k) {
    check_k(k, 6, 18);
    return 23 - vertex_count(k);
}

long evident_det(int k) {
    check_k(k, 6, 18);
    static const long dets[] = {16, 12, 20, 16, 14, 12, 18, 28, 23, 31, 20, 48, 44};
    return dets[k - 6];
}

std::vector<long> group_Gk(int k) {
    check_k(k, 6, 18);
    switch (k) {
        case 6:  return {2, 2, 4};
        case 7:  return {12};
        case 8:  return {20};  // printed as Z/10; |det L_8| = 20 and the alpha
                               // row exhibits a Z/20 summand, so Z/20
        case 9:  return {16};
        case 10: return {14};
        case 11: return {12};
        case 12: return {18};
        case 13: return {2, 14};
        case 14: return {23};
        case 15: return {31};
        case 16: return {2, 10};
        case 17: return {2, 2, 12};
        case 18: return {44};
    }
    return {};
}

std::vector<AlphaRow> alpha_rows(int k) {
    check_k(k, 6, 18);
    switch (k) {
        case 6:
            return {{4, {q(3,4), q(1,4), q(1,4)}, q(7,4)},
                    {2, {q(0,1), q(1,2), q(0,1)}, q(0,1)},
                    {2, {q(1,2), q(1,2), q(0,1)}, q(1,1)}};
        case 7: return {{12, {q(1,6), q(11,12), q(5,12)}, q(23,12)}};
        case 8: return {{20, {q(1,10), q(7,20), q(19,20)}, q(39,20)}};
        case 9: return {{16, {q(3,8), q(1,8), q(15,16)}, q(31,16)}};
        case 10: return {{14, {q(2,7), q(5,14), q(3,14)}, q(3,14)}};
        case 11: return {{12, {q(7,12), q(11,12), q(1,4)}, q(19,12)}};
        case 12: return {{18, {q(13,18), q(8,9), q(1,3)}, q(31,18)}};
        case 13:
            return {{14, {q(2,7), q(5,7), q(3,14), q(1,14)}, q(12,7)},
                    {2, {q(0,1), q(1,2), q(0,1), q(1,2)}, q(0,1)}};
        case 14: return {{23, {q(9,23), q(17,23), q(5,23), q(1,23)}, q(40,23)}};
        case 15: return {{31, {q(13,31), q(5,31), q(12,31), q(14,31)}, q(44,31)}};
        case 16:
            return {{10, {q(3,10), q(1,5), q(7,10), q(1,10)}, q(17,10)},
                    {2, {q(1,2), q(1,2), q(0,1), q(1,2)}, q(1,2)}};
        case 17:
            return {{12, {q(1,6), q(5,6), q(1,3), q(5,12), q(5,12)}, q(17,12)},
                    {2, {q(0,1), q(0,1), q(1,2), q(0,1), q(1,2)}, q(0,1)},
                    {2, {q(0,1), q(1,2), q(1,2), q(1,2), q(1,2)}, q(1,1)}};
        case 18:
            return {{44, {q(13,44), q(5,44), q(27,44), q(31,44), q(25,44)}, q(57,44)}};
    }
    return {};
}

std::vector<BetaRow> beta_rows(int k) {
    check_k(k, 6, 18);
    switch (k) {
        case 6:  return {{4, q(1,4)}, {2, q(0,1)}, {2, q(1,1)}};
        case 7:  return {{12, q(1,12)}};
        case 8:  return {{20, q(1,20)}};
        case 9:  return {{16, q(1,16)}};
        case 10: return {{14, q(25,14)}};
        case 11: return {{12, q(5,12)}};
        case 12: return {{18, q(5,18)}};
        case 13: return {{14, q(2,7)}, {2, q(0,1)}};
        case 14: return {{23, q(6,23)}};
        case 15: return {{31, q(18,31)}};
        case 16: return {{10, q(3,10)}, {2, q(3,2)}};
        case 17: return {{12, q(7,12)}, {2, q(0,1)}, {2, q(1,1)}};
        case 18: return {{44, q(31,44)}};
    }
    return {};
}

SectionStrings section_strings(int k) {
    check_k(k, 6, 18);
    switch (k) {
        case 6:  return {true,  "l1*x1^2", "l1*x1^2*(l2 + x1 + x1^2)"};
        case 7:  return {false, "0", "l3*x1^3"};
        case 8:  return {false, "0", "l3*x1^2*(l2 + x1)"};
        case 9:  return {true,  "l1*x1^2", "l1*x1^2*(l2 + x1 + x1^2)"};
        case 10: return {false, "0", "l3*x1^2"};
        case 11: return {false, "0", "l3*x1^2"};
        case 12: return {false, "0", "l3*x1^2*(l2 + x1)"};
        case 13: return {true,  "x1*(l4 + l3*x1)", "x1*(l4 + l3*x1)*(l2 + x1 + x1^2)"};
        case 14: return {false, "0", "l1*x1^3"};
        case 15: return {false, "0", "l1*x1^2*(l4 + l3*x1)"};
        case 16: return {false, "0", "l1*x1^2"};
        case 17: return {true,  "x1*(l2 + l5*x1)*(l4 + x1)",
                         "x1*(l2 + l5*x1)*(l4 + x1)*(l3 + x1 + x1^2)"};
        case 18: return {false, "0", "l1*x1^3*(l5 + x1)"};
    }
    return {};
}

}  // namespace fanok3::data
