#include "epb/render.hpp"

namespace epb {

// 256-entry palettes sampled from perceptually uniform colour maps
// (cyclic: twilight, sequential: viridis). Mirrored in resources/*.csv.
namespace {

constexpr Rgb kCyclic[256] = {
    {226, 217, 226}, {225, 217, 226}, {224, 217, 226}, {222, 217, 225}, {221, 217, 224}, {220, 217, 223}, {218, 216, 223}, {216, 216, 222},
    {214, 215, 221}, {212, 214, 220}, {210, 213, 219}, {208, 212, 217}, {205, 211, 216}, {203, 210, 215}, {200, 208, 214}, {197, 207, 213},
    {194, 206, 212}, {191, 204, 211}, {188, 203, 209}, {185, 201, 208}, {182, 200, 207}, {179, 198, 206}, {176, 197, 205}, {173, 195, 205},
    {170, 194, 204}, {167, 192, 203}, {164, 190, 202}, {161, 189, 201}, {158, 187, 201}, {156, 185, 200}, {153, 184, 200}, {150, 182, 199},
    {147, 180, 198}, {146, 179, 198}, {142, 177, 197}, {140, 175, 197}, {137, 173, 197}, {136, 172, 196}, {133, 169, 196}, {130, 167, 195},
    {128, 165, 195}, {127, 165, 195}, {124, 162, 194}, {122, 160, 194}, {120, 158, 194}, {119, 157, 194}, {117, 154, 193}, {115, 152, 193},
    {113, 150, 193}, {113, 149, 192}, {110, 146, 192}, {109, 144, 192}, {108, 142, 191}, {107, 141, 191}, {105, 138, 191}, {104, 136, 190},
    {103, 134, 190}, {103, 133, 190}, {102, 130, 189}, {101, 127, 189}, {100, 125, 188}, {100, 124, 188}, {99, 121, 187}, {98, 119, 187},
    {98, 117, 186}, {97, 114, 186}, {97, 113, 185}, {96, 110, 184}, {96, 108, 184}, {96, 105, 183}, {96, 103, 182}, {95, 101, 181},
    {95, 98, 180}, {95, 96, 180}, {95, 95, 179}, {95, 91, 178}, {95, 89, 177}, {95, 87, 176}, {94, 84, 174}, {94, 82, 173},
    {94, 79, 172}, {94, 77, 171}, {94, 76, 170}, {94, 72, 168}, {94, 70, 166}, {94, 67, 165}, {93, 65, 163}, {93, 62, 161},
    {93, 60, 160}, {93, 58, 158}, {92, 56, 157}, {92, 53, 154}, {91, 50, 152}, {91, 48, 149}, {90, 46, 147}, {90, 43, 144},
    {89, 41, 142}, {88, 39, 139}, {88, 38, 138}, {87, 35, 133}, {86, 33, 130}, {85, 31, 127}, {83, 30, 124}, {82, 28, 121},
    {81, 26, 117}, {79, 25, 114}, {79, 25, 112}, {76, 23, 107}, {75, 22, 104}, {73, 21, 100}, {71, 20, 97}, {70, 20, 94},
    {68, 19, 90}, {66, 18, 87}, {65, 18, 86}, {63, 18, 81}, {61, 17, 78}, {60, 17, 75}, {58, 17, 73}, {57, 17, 70},
    {55, 17, 68}, {54, 17, 66}, {54, 17, 65}, {52, 17, 62}, {51, 17, 60}, {50, 18, 58}, {49, 19, 57}, {48, 20, 55},
    {48, 20, 55}, {49, 19, 55}, {51, 18, 55}, {52, 18, 56}, {52, 18, 56}, {54, 17, 57}, {56, 17, 57}, {58, 17, 58},
    {59, 17, 59}, {61, 17, 60}, {63, 18, 61}, {65, 18, 61}, {67, 18, 62}, {70, 18, 64}, {72, 19, 65}, {74, 19, 66},
    {77, 20, 67}, {79, 20, 68}, {82, 21, 69}, {84, 21, 70}, {86, 21, 70}, {89, 22, 72}, {92, 23, 73}, {95, 23, 74},
    {97, 24, 75}, {100, 25, 75}, {103, 25, 76}, {105, 26, 77}, {108, 27, 78}, {111, 28, 78}, {113, 29, 79}, {116, 30, 79},
    {118, 31, 79}, {121, 32, 80}, {123, 33, 80}, {126, 34, 80}, {127, 35, 80}, {131, 37, 80}, {133, 38, 80}, {135, 39, 80},
    {138, 41, 80}, {140, 42, 80}, {142, 44, 80}, {144, 46, 80}, {146, 47, 80}, {148, 49, 80}, {150, 51, 80}, {152, 53, 80},
    {154, 55, 80}, {156, 57, 80}, {158, 59, 80}, {160, 61, 80}, {160, 62, 80}, {163, 65, 80}, {165, 67, 80}, {166, 69, 80},
    {168, 71, 80}, {169, 73, 80}, {171, 75, 80}, {172, 77, 81}, {174, 80, 81}, {175, 82, 81}, {177, 84, 82}, {178, 86, 82},
    {179, 89, 83}, {181, 91, 83}, {182, 93, 84}, {183, 95, 85}, {184, 97, 85}, {185, 100, 86}, {186, 102, 87}, {187, 105, 88},
    {188, 107, 89}, {189, 110, 90}, {190, 112, 91}, {191, 114, 93}, {192, 117, 94}, {193, 119, 95}, {194, 122, 97}, {194, 124, 99},
    {195, 127, 100}, {196, 129, 102}, {197, 132, 104}, {197, 134, 106}, {198, 135, 107}, {198, 139, 110}, {199, 142, 113}, {200, 144, 115},
    {200, 146, 117}, {201, 149, 120}, {201, 151, 123}, {202, 154, 125}, {202, 156, 128}, {203, 159, 131}, {204, 161, 134}, {204, 163, 137},
    {205, 166, 140}, {205, 168, 143}, {206, 171, 146}, {207, 173, 150}, {207, 174, 151}, {208, 178, 156}, {209, 180, 160}, {209, 182, 163},
    {210, 184, 167}, {211, 186, 170}, {212, 189, 173}, {213, 191, 177}, {214, 193, 180}, {215, 195, 184}, {216, 197, 187}, {216, 199, 190},
    {217, 201, 194}, {218, 203, 197}, {219, 204, 200}, {220, 206, 203}, {220, 207, 205}, {221, 209, 209}, {222, 211, 211}, {223, 212, 214},
    {223, 213, 216}, {224, 214, 218}, {224, 215, 219}, {225, 216, 221}, {225, 216, 223}, {226, 217, 224}, {226, 217, 225}, {226, 217, 226},
};

constexpr Rgb kSequential[256] = {
    {68, 1, 84}, {68, 2, 86}, {69, 4, 87}, {69, 5, 89}, {70, 7, 90}, {70, 8, 92}, {70, 10, 93}, {70, 11, 94},
    {71, 13, 96}, {71, 14, 97}, {71, 16, 99}, {71, 17, 100}, {71, 19, 101}, {72, 20, 103}, {72, 22, 104}, {72, 23, 105},
    {72, 24, 106}, {72, 26, 108}, {72, 27, 109}, {72, 28, 110}, {72, 29, 111}, {72, 31, 112}, {72, 32, 113}, {72, 33, 115},
    {72, 35, 116}, {72, 36, 117}, {72, 37, 118}, {72, 38, 119}, {72, 40, 120}, {72, 41, 121}, {71, 42, 122}, {71, 44, 122},
    {71, 45, 123}, {71, 46, 124}, {71, 47, 125}, {70, 48, 126}, {70, 50, 126}, {70, 51, 127}, {70, 52, 128}, {69, 53, 129},
    {69, 55, 129}, {69, 56, 130}, {68, 57, 131}, {68, 58, 131}, {68, 59, 132}, {67, 61, 132}, {67, 62, 133}, {66, 63, 133},
    {66, 64, 134}, {66, 65, 134}, {65, 66, 135}, {65, 68, 135}, {64, 69, 136}, {64, 70, 136}, {63, 71, 136}, {63, 72, 137},
    {62, 73, 137}, {62, 74, 137}, {62, 76, 138}, {61, 77, 138}, {61, 78, 138}, {60, 79, 138}, {60, 80, 139}, {59, 81, 139},
    {59, 82, 139}, {58, 83, 139}, {58, 84, 140}, {57, 85, 140}, {57, 86, 140}, {56, 88, 140}, {56, 89, 140}, {55, 90, 140},
    {55, 91, 141}, {54, 92, 141}, {54, 93, 141}, {53, 94, 141}, {53, 95, 141}, {52, 96, 141}, {52, 97, 141}, {51, 98, 141},
    {51, 99, 141}, {50, 100, 142}, {50, 101, 142}, {49, 102, 142}, {49, 103, 142}, {49, 104, 142}, {48, 105, 142}, {48, 106, 142},
    {47, 107, 142}, {47, 108, 142}, {46, 109, 142}, {46, 110, 142}, {46, 111, 142}, {45, 112, 142}, {45, 113, 142}, {44, 113, 142},
    {44, 114, 142}, {44, 115, 142}, {43, 116, 142}, {43, 117, 142}, {42, 118, 142}, {42, 119, 142}, {42, 120, 142}, {41, 121, 142},
    {41, 122, 142}, {41, 123, 142}, {40, 124, 142}, {40, 125, 142}, {39, 126, 142}, {39, 127, 142}, {39, 128, 142}, {38, 129, 142},
    {38, 130, 142}, {38, 130, 142}, {37, 131, 142}, {37, 132, 142}, {37, 133, 142}, {36, 134, 142}, {36, 135, 142}, {35, 136, 142},
    {35, 137, 142}, {35, 138, 141}, {34, 139, 141}, {34, 140, 141}, {34, 141, 141}, {33, 142, 141}, {33, 143, 141}, {33, 144, 141},
    {33, 145, 140}, {32, 146, 140}, {32, 146, 140}, {32, 147, 140}, {31, 148, 140}, {31, 149, 139}, {31, 150, 139}, {31, 151, 139},
    {31, 152, 139}, {31, 153, 138}, {31, 154, 138}, {30, 155, 138}, {30, 156, 137}, {30, 157, 137}, {31, 158, 137}, {31, 159, 136},
    {31, 160, 136}, {31, 161, 136}, {31, 161, 135}, {31, 162, 135}, {32, 163, 134}, {32, 164, 134}, {33, 165, 133}, {33, 166, 133},
    {34, 167, 133}, {34, 168, 132}, {35, 169, 131}, {36, 170, 131}, {37, 171, 130}, {37, 172, 130}, {38, 173, 129}, {39, 173, 129},
    {40, 174, 128}, {41, 175, 127}, {42, 176, 127}, {44, 177, 126}, {45, 178, 125}, {46, 179, 124}, {47, 180, 124}, {49, 181, 123},
    {50, 182, 122}, {52, 182, 121}, {53, 183, 121}, {55, 184, 120}, {56, 185, 119}, {58, 186, 118}, {59, 187, 117}, {61, 188, 116},
    {63, 188, 115}, {64, 189, 114}, {66, 190, 113}, {68, 191, 112}, {70, 192, 111}, {72, 193, 110}, {74, 193, 109}, {76, 194, 108},
    {78, 195, 107}, {80, 196, 106}, {82, 197, 105}, {84, 197, 104}, {86, 198, 103}, {88, 199, 101}, {90, 200, 100}, {92, 200, 99},
    {94, 201, 98}, {96, 202, 96}, {99, 203, 95}, {101, 203, 94}, {103, 204, 92}, {105, 205, 91}, {108, 205, 90}, {110, 206, 88},
    {112, 207, 87}, {115, 208, 86}, {117, 208, 84}, {119, 209, 83}, {122, 209, 81}, {124, 210, 80}, {127, 211, 78}, {129, 211, 77},
    {132, 212, 75}, {134, 213, 73}, {137, 213, 72}, {139, 214, 70}, {142, 214, 69}, {144, 215, 67}, {147, 215, 65}, {149, 216, 64},
    {152, 216, 62}, {155, 217, 60}, {157, 217, 59}, {160, 218, 57}, {162, 218, 55}, {165, 219, 54}, {168, 219, 52}, {170, 220, 50},
    {173, 220, 48}, {176, 221, 47}, {178, 221, 45}, {181, 222, 43}, {184, 222, 41}, {186, 222, 40}, {189, 223, 38}, {192, 223, 37},
    {194, 223, 35}, {197, 224, 33}, {200, 224, 32}, {202, 225, 31}, {205, 225, 29}, {208, 225, 28}, {210, 226, 27}, {213, 226, 26},
    {216, 226, 25}, {218, 227, 25}, {221, 227, 24}, {223, 227, 24}, {226, 228, 24}, {229, 228, 25}, {231, 228, 25}, {234, 229, 26},
    {236, 229, 27}, {239, 229, 28}, {241, 229, 29}, {244, 230, 30}, {246, 230, 32}, {248, 230, 33}, {251, 231, 35}, {253, 231, 37},
};

} // namespace

std::span<const Rgb, 256> cyclic_palette() { return kCyclic; }
std::span<const Rgb, 256> sequential_palette() { return kSequential; }

} // namespace epb
