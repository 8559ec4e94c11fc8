#pragma once

// Reference values for the regression surface of the
// `reproduce` subcommand. Transcribed by hand from the source tables;
// an empty string marks a cell the source leaves blank. Keeping them
// as data (rather than recomputing) makes the check independent of the
// solvers under test.

#include <array>
#include <cstddef>
#include <string_view>

namespace radspec::golden {

struct TableRow {
    int index;  // basis size N or Hankel dimension D
    std::array<std::string_view, 4> w;
};

// Variational eigenvalues W_{j,0}(-sqrt(2)) vs basis size N.
inline constexpr std::array<TableRow, 9> kTable1{{
    {2, {"4.000000000", "10.49997602", "", ""}},
    {3, {"4.000000000", "7.751061995", "19.88102859", ""}},
    {4, {"4.000000000", "7.694010921", "11.97562584", "33.92039998"}},
    {5, {"4.000000000", "7.693979367", "11.51212379", "17.05520450"}},
    {6, {"4.000000000", "7.693978905", "11.50604696", "15.46896992"}},
    {7, {"4.000000000", "7.693978892", "11.50604243", "15.37652840"}},
    {8, {"4.000000000", "7.693978891", "11.50604238", "15.37592761"}},
    {9, {"4.000000000", "7.693978891", "11.50604238", "15.37592718"}},
    {10, {"4.000000000", "7.693978891", "11.50604238", "15.37592718"}},
}};

// Variational eigenvalues W_{j,0}(+sqrt(2)) vs basis size N.
inline constexpr std::array<TableRow, 12> kTable2{{
    {2, {"-1.180391283", "4.000000000", "", ""}},
    {3, {"-1.401182256", "4.000000000", "9.284143096", ""}},
    {4, {"-1.449885589", "4.000000000", "8.345259771", "17.66452696"}},
    {5, {"-1.458156835", "4.000000000", "8.344361267", "12.69095166"}},
    {6, {"-1.459389344", "4.000000000", "8.344349784", "12.53313315"}},
    {7, {"-1.459560848", "4.000000000", "8.344349442", "12.53290257"}},
    {8, {"-1.459583736", "4.000000000", "8.344349427", "12.53290132"}},
    {9, {"-1.459586704", "4.000000000", "8.344349427", "12.53290130"}},
    {10, {"-1.459587081", "4.000000000", "8.344349427", "12.53290130"}},
    {11, {"-1.459587128", "4.000000000", "8.344349427", "12.53290130"}},
    {12, {"-1.459587134", "4.000000000", "8.344349427", "12.53290130"}},
    {13, {"-1.459587134", "4.000000000", "8.344349427", "12.53290130"}},
}};

// RPM eigenvalues W_{j,0}(-sqrt(2)) vs Hankel dimension D.
inline constexpr std::array<TableRow, 8> kTable3{{
    {8, {"4.000000000", "7.693449704", "11.16567414", ""}},
    {9, {"4.000000000", "7.693990279", "11.54430665", "15.16153572"}},
    {10, {"4.000000000", "7.693978617", "11.50547430", "15.12357546"}},
    {11, {"4.000000000", "7.693978898", "11.50605268", "15.41617482"}},
    {12, {"4.000000000", "7.693978891", "11.50604217", "15.37544063"}},
    {13, {"4.000000000", "7.693978891", "11.50604238", "15.37593481"}},
    {14, {"4.000000000", "7.693978891", "11.50604238", "15.37592704"}},
    {15, {"4.000000000", "7.693978891", "11.50604238", "15.37592718"}},
}};

// RPM eigenvalues W_{j,0}(+sqrt(2)) vs Hankel dimension D.
inline constexpr std::array<TableRow, 8> kTable4{{
    {8, {"-1.459586733", "4.000000000", "8.413675510", "12.38593112"}},
    {9, {"-1.459587149", "4.000000000", "8.343322691", "12.35721732"}},
    {10, {"-1.459587134", "4.000000000", "8.344372803", "12.62125942"}},
    {11, {"-1.459587135", "4.000000000", "8.344348852", "12.53183748"}},
    {12, {"-1.459587134", "4.000000000", "8.344349441", "12.53292129"}},
    {13, {"-1.459587134", "4.000000000", "8.344349426", "12.53290088"}},
    {14, {"-1.459587134", "4.000000000", "8.344349427", "12.53290131"}},
    {15, {"-1.459587134", "4.000000000", "8.344349427", "12.53290130"}},
}};

}  // namespace radspec::golden
