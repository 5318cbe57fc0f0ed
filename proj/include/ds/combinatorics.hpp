#ifndef DS_COMBINATORICS_HPP
#define DS_COMBINATORICS_HPP

#include <set>
#include <string>
#include <vector>

namespace ds {

// Integer partition, parts weakly decreasing and strictly positive.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const; // |lambda|
    int length() const { return (int)parts.size(); }
    Partition conjugate() const;
    std::string to_string() const; // "(4,3,1)"

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

// 1-based cell, French convention: row counted from the bottom.
struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
    bool operator<(const Cell& o) const { return row != o.row ? row < o.row : col < o.col; }
};

using Word = std::vector<int>;

enum class TabKind { Standard, Semistandard, GeneralBijective };

// Filling of a Young diagram. rows[0] is the bottom row.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    Tableau(Partition sh, std::vector<std::vector<int>> r);

    int size() const { return shape.size(); }
    int entry(const Cell& c) const { return rows[c.row - 1][c.col - 1]; }
    int& entry(const Cell& c) { return rows[c.row - 1][c.col - 1]; }

    // Reading order: top row first, each row left to right.
    std::vector<Cell> cells_reading_order() const;
    Word reading_word() const;
    std::vector<int> content() const;
    Cell cell_of(int value) const; // bijective fillings only

    bool is_semistandard() const;
    bool is_standard() const;
    bool is_bijective() const; // entries exactly 1..n, no row/column condition

    bool operator==(const Tableau& o) const { return rows == o.rows; }
    bool operator<(const Tableau& o) const;

    std::string to_string() const; // "1 2 4 / 3 5 / 6 7", rows bottom to top
    static Tableau from_string(const std::string& s);
    static Tableau from_reading_word(const Partition& shape, const Word& w);
};

struct CochargeLabeling {
    std::vector<int> labels;      // aligned to the letters of the word
    std::vector<int> subword_ids; // 1-based id of the cocharge subword of each letter
    int total = 0;
};

// ccTab_mu / ccTab'_mu values laid out on the shape of S (rows bottom to top).
struct MuCochargePair {
    std::vector<std::vector<int>> cc_tab;
    std::vector<std::vector<int>> cc_tab_prime;
    int cc_mu = 0;
    int cc_mu_prime = 0;
};

// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

std::vector<Tableau> enumerate_standard(const Partition& shape);
std::vector<Tableau> enumerate_bijective(const Partition& shape);
std::vector<Tableau> enumerate_semistandard_content(const Partition& shape,
                                                    const Partition& content);

Word reading_word(const Tableau& T);
Tableau standardize(const Tableau& T);
Tableau rsk_insert(const Word& w);

struct DescentData {
    std::set<int> descents;
    int maj = 0;
    int des = 0;
};
DescentData descent_data(const Tableau& T);

// maj_{i,j}: sum of descents d with i <= d < j; comaj_{i,j}: sum of n-d over those.
std::pair<int, int> maj_comaj_range(const Tableau& T, int i, int j);

CochargeLabeling cocharge(const Word& w);

Word flip(const Word& w);
Word reverse_word(const Word& w);

Tableau phi(const Tableau& T);

MuCochargePair mu_cocharge_tableaux(const Tableau& S, int k);

} // namespace ds

#endif
