#include "galrep/reference_table.hpp"

#include <stdexcept>

#include "galrep/census.hpp"

namespace galrep {

namespace {

std::vector<ReferenceRow> make_table() {
  std::vector<ReferenceRow> t = {
    {11, 10, true, 10, "0"},
    {13, 12, true, 12, "0"},
    {17, 48, true, 48, "0"},
    {19, 108, true, 108, "0"},
    {23, 143, true, 154, "0.020793"},
    {29, 336, true, 336, "0"},
    {31, 555, true, 570, "0.015608"},
    {37, 720, true, 756, "0.026296"},
    {41, 1080, true, 1080, "0"},
    {43, 1554, true, 1554, "0"},
    {47, 1656, true, 1702, "0.020823"},
    {53, 2496, true, 2496, "0"},
    {59, 3393, false, 3538, "0.041654"},
    {61, 3900, true, 3900, "0"},
    {67, 5940, true, 6072, "0.029405"},
    {71, 6195, true, 6370, "0.034715"},
    {73, 6840, true, 6912, "0.01351"},
    {79, 9906, false, 10062, "0.024995"},
    {83, 10373, true, 10414, "0.005951"},
    {89, 12848, true, 12936, "0.011109"},
    {97, 16896, true, 16896, "0"},
    {101, 19100, true, 19200, "0.009802"},
    {103, 22236, true, 22440, "0.019228"},
    {107, 22737, false, 23002, "0.023146"},
    {109, 24300, true, 24300, "0"},
    {113, 27104, true, 27216, "0.008771"},
    {127, 42084, true, 42210, "0.007812"},
    {131, 42510, false, 43030, "0.030301"},
    {137, 49368, true, 49368, "0"},
    {139, 54717, false, 55338, "0.032141"},
    {149, 63788, true, 63936, "0.006666"},
    {151, 70575, false, 71100, "0.023025"},
    {157, 74256, true, 75036, "0.031644"},
    {163, 89100, true, 89424, "0.012194"},
    {167, 90387, true, 90802, "0.01488"},
    {173, 100620, false, 101136, "0.01724"},
    {179, 111784, false, 112318, "0.016666"},
    {181, 115920, true, 116100, "0.005494"},
    {191, 136040, false, 136990, "0.02604"},
    {193, 140928, false, 141312, "0.010309"},
    {197, 150528, true, 150528, "0"},
    {199, 162756, true, 163152, "0.009999"},
    {211, 194355, true, 194460, "0.002358"},
    {223, 229215, false, 229770, "0.01116"},
    {227, 231424, true, 232102, "0.013157"},
    {229, 237576, false, 238260, "0.013043"},
    {233, 250792, true, 251256, "0.008546"},
    {239, 270725, true, 271558, "0.014583"},
    {241, 277680, false, 278400, "0.012396"},
    {251, 314875, true, 315250, "0.005952"},
    {257, 337664, false, 338688, "0.015503"},
    {263, 362084, false, 363394, "0.018939"},
    {269, 388332, false, 389136, "0.01111"},
    {271, 411345, false, 412830, "0.02022"},
    {277, 425040, false, 425316, "0.003597"},
    {281, 444360, true, 444360, "0"},
    {283, 468825, false, 470094, "0.015844"},
    {293, 503408, true, 504576, "0.013605"},
    {307, 598995, false, 600372, "0.01461"},
    {311, 602485, false, 604810, "0.024038"},
    {313, 616200, false, 616512, "0.003184"},
    {317, 640532, true, 640848, "0.003144"},
    {331, 751245, false, 752730, "0.013554"},
    {337, 771456, true, 771456, "0"},
    {347, 842164, false, 843202, "0.00862"},
    {349, 857472, true, 857820, "0.002857"},
    {353, 886336, false, 888096, "0.014124"},
    {359, 933127, true, 934738, "0.012499"},
    {367, 1025898, true, 1026630, "0.005434"},
    {373, 1049040, false, 1049412, "0.002673"},
    {379, 1128897, false, 1130598, "0.011842"},
    {383, 1135686, true, 1137214, "0.010416"},
    {389, 1190772, true, 1191936, "0.007692"},
    {397, 1266804, false, 1267596, "0.005025"},
    {401, 1306000, true, 1306800, "0.004975"},
    {409, 1386792, true, 1387200, "0.002439"},
    {419, 1491006, false, 1492678, "0.009523"},
    {421, 1513260, false, 1514100, "0.004739"},
    {431, 1623250, false, 1625830, "0.013888"},
    {433, 1646352, false, 1648512, "0.01152"},
    {439, 1755723, false, 1758132, "0.012499"},
    {443, 1766232, true, 1766674, "0.002252"},
    {449, 1839040, true, 1839936, "0.004444"},
    {457, 1939824, true, 1940736, "0.004366"},
    {461, 1992260, true, 1992720, "0.002164"},
    {463, 2061213, false, 2062830, "0.007543"},
    {467, 2070205, true, 2072302, "0.009615"},
    {479, 2233216, false, 2237518, "0.018749"},
    {487, 2399625, true, 2400840, "0.005122"},
    {491, 2406880, false, 2411290, "0.018292"},
    {499, 2581383, false, 2582628, "0.004999"},
    {503, 2590320, false, 2593834, "0.013888"},
    {509, 2688336, true, 2688336, "0"},
    {521, 2883400, true, 2884440, "0.003831"},
    {523, 2972268, true, 2973834, "0.005725"},
    {541, 3230820, false, 3231900, "0.00369"},
    {547, 3400761, true, 3402672, "0.006386"},
    {557, 3528376, true, 3529488, "0.003584"},
    {563, 3643446, false, 3645694, "0.007092"},
    {569, 3763000, false, 3764136, "0.003508"},
    {571, 3869730, true, 3870870, "0.003496"},
    {577, 3924288, false, 3926016, "0.00519"},
    {587, 4132765, true, 4135402, "0.007653"},
    {593, 4263584, true, 4264176, "0.001683"},
    {599, 4389918, false, 4395898, "0.016666"},
    {601, 4438800, false, 4440000, "0.003322"},
    {607, 4648626, true, 4651050, "0.006578"},
    {613, 4712400, true, 4713012, "0.001628"},
    {617, 4804184, true, 4806648, "0.006472"},
    {619, 4929786, false, 4932258, "0.006451"},
    {631, 5222070, true, 5225220, "0.007911"},
    {641, 5393280, true, 5393280, "0"},
    {643, 5527941, false, 5528904, "0.002329"},
    {647, 5541065, false, 5547202, "0.01466"},
    {653, 5701088, false, 5703696, "0.006116"},
    {659, 5861135, true, 5863438, "0.005303"},
    {661, 5914260, true, 5916900, "0.006042"},
    {673, 6245568, true, 6246912, "0.002967"},
    {677, 6357780, true, 6359808, "0.004424"},
    {683, 6529468, true, 6531514, "0.004385"},
    {691, 6859980, true, 6862740, "0.00578"},
    {701, 7063700, false, 7064400, "0.001424"},
    {709, 7309392, true, 7310100, "0.001408"},
    {719, 7619057, false, 7625878, "0.013194"},
    {727, 7990356, true, 7993260, "0.005494"},
    {733, 8080548, false, 8082012, "0.002724"},
    {739, 8394012, true, 8395488, "0.002702"},
    {743, 8414280, false, 8419474, "0.009408"},
    {751, 8806875, false, 8811750, "0.008643"},
    {757, 8904924, true, 8906436, "0.002638"},
    {761, 9047800, false, 9049320, "0.002624"},
    {769, 9337344, false, 9338880, "0.002597"},
    {773, 9484792, false, 9486336, "0.002583"},
    {787, 10140186, true, 10140972, "0.001269"},
    {797, 10401332, true, 10402128, "0.001253"},
    {809, 10878912, true, 10881336, "0.003703"},
    {811, 11094165, false, 11097810, "0.005541"},
    {821, 11373400, true, 11375040, "0.002433"},
    {823, 11596776, true, 11598420, "0.002427"},
    {827, 11624711, true, 11627602, "0.004227"},
    {829, 11712060, true, 11712060, "0"},
    {839, 12133402, false, 12143458, "0.014285"},
    {853, 12762960, false, 12763812, "0.00117"},
    {857, 12943576, false, 12945288, "0.00233"},
    {859, 13187031, true, 13188318, "0.001744"},
    {863, 13215322, true, 13220494, "0.006944"},
    {877, 13874964, true, 13876716, "0.002277"},
    {881, 14066800, true, 14068560, "0.002267"},
    {883, 14324121, false, 14325444, "0.001696"},
    {887, 14352314, true, 14359402, "0.009008"},
    {907, 15524763, false, 15526122, "0.001651"},
    {911, 15553265, false, 15561910, "0.010416"},
    {919, 16145325, false, 16151292, "0.007065"},
    {929, 16504480, true, 16506336, "0.00215"},
    {937, 16937856, true, 16937856, "0"},
    {941, 17156880, true, 17156880, "0"},
    {947, 17487756, true, 17488702, "0.001054"},
    {953, 17822392, true, 17824296, "0.002096"},
    {967, 18812367, false, 18817680, "0.005681"},
    {971, 18853405, true, 18857770, "0.004629"},
    {977, 19210608, true, 19210608, "0"},
    {983, 19558985, false, 19568314, "0.009654"},
    {991, 20249460, false, 20254410, "0.00504"},
    {997, 20418996, true, 20418996, "0"},
    {1009, 21164976, false, 21168000, "0.00297"},
    {1013, 21422016, true, 21422016, "0"},
    {1019, 21800470, false, 21806578, "0.005882"},
    {1021, 21935100, true, 21935100, "0"},
    {1031, 22580175, true, 22588930, "0.008236"},
    {1033, 22720512, true, 22720512, "0"},
    {1039, 23336835, true, 23343582, "0.006249"},
    {1049, 23795888, false, 23796936, "0.000952"},
    {1051, 24159450, false, 24161550, "0.001901"},
    {1061, 24622740, false, 24625920, "0.002824"},
    {1063, 24992577, false, 24999480, "0.006109"},
    {1069, 25187712, false, 25188780, "0.000934"},
    {1087, 26728632, false, 26731890, "0.002757"},
    {1091, 26776940, true, 26782390, "0.004578"},
    {1093, 26927628, false, 26929812, "0.001828"},
    {1097, 27224640, false, 27227928, "0.002732"},
    {1103, 27672873, true, 27678934, "0.004981"},
    {1109, 28134336, true, 28134336, "0"},
    {1117, 28747044, false, 28749276, "0.001788"},
    {1123, 29474940, false, 29477184, "0.001779"},
    {1129, 29684448, false, 29688960, "0.003539"},
    {1151, 31449050, true, 31465150, "0.012152"},
    {1153, 31627008, true, 31629312, "0.001733"},
    {1163, 32459889, true, 32462794, "0.002147"},
    {1171, 33420465, true, 33422220, "0.001279"},
    {1181, 33992260, false, 33998160, "0.00423"},
    {1187, 34513786, false, 34520902, "0.00505"},
    {1193, 35047184, true, 35048376, "0.000837"},
    {1201, 35756400, false, 35760000, "0.002495"},
    {1213, 36846012, true, 36846012, "0"},
    {1217, 37208384, true, 37213248, "0.003284"},
    {1223, 37757967, true, 37768354, "0.006944"},
    {1229, 38325880, false, 38328336, "0.001626"},
    {1231, 38820645, false, 38829870, "0.006087"},
    {1237, 39081084, true, 39083556, "0.001615"},
    {1249, 40234272, false, 40235520, "0.000799"},
    {1259, 41206419, false, 41213338, "0.004365"},
    {1277, 43008856, false, 43011408, "0.001564"},
    {1279, 43544655, true, 43552962, "0.005078"},
    {1283, 43618127, true, 43622614, "0.002725"},
    {1289, 44237648, true, 44238936, "0.000775"},
    {1291, 44782350, false, 44790090, "0.004643"},
    {1297, 45067104, true, 45069696, "0.00154"},
    {1301, 45485700, true, 45489600, "0.002304"},
    {1303, 46045881, false, 46051740, "0.00345"},
    {1307, 46118125, true, 46124002, "0.00344"},
    {1319, 47392644, true, 47409778, "0.009848"},
    {1321, 47622960, false, 47625600, "0.001512"},
    {1327, 48638343, true, 48644310, "0.003388"},
    {1361, 52097520, true, 52097520, "0"},
    {1367, 52778142, true, 52791802, "0.007309"},
    {1373, 53486048, false, 53491536, "0.002911"},
    {1381, 54429960, false, 54434100, "0.00217"},
    {1399, 56991567, false, 57002052, "0.005357"},
    {1409, 57820928, true, 57822336, "0.000709"},
    {1423, 59981382, false, 59987070, "0.002808"},
    {1427, 60066685, false, 60073102, "0.003151"},
    {1429, 60321576, false, 60325860, "0.002097"},
    {1433, 60835656, true, 60835656, "0"},
    {1439, 61588821, false, 61605358, "0.007986"},
    {1447, 63065121, true, 63074520, "0.004488"},
    {1451, 63159100, true, 63163450, "0.002066"},
    {1453, 63423360, false, 63424812, "0.000687"},
    {1459, 64651365, true, 64656468, "0.002397"},
    {1471, 66256575, true, 66266130, "0.004415"},
    {1481, 67169800, false, 67172760, "0.001349"},
    {1483, 67895607, false, 67900794, "0.002358"},
    {1487, 67980042, true, 67994902, "0.00672"},
    {1489, 68266464, false, 68269440, "0.001342"},
    {1493, 68822976, true, 68822976, "0"},
    {1499, 69649510, true, 69658498, "0.003999"},
    {1511, 71329380, false, 71349010, "0.008597"},
    {1523, 73062849, true, 73066654, "0.00164"},
    {1531, 74704545, false, 74711430, "0.002937"},
    {1543, 76473177, false, 76483200, "0.004209"},
    {1549, 76879872, false, 76881420, "0.000645"},
    {1553, 77474288, false, 77480496, "0.002574"},
    {1559, 78363505, true, 78384538, "0.008653"},
    {1567, 80103249, true, 80108730, "0.002232"},
    {1571, 80206590, true, 80212870, "0.002544"},
    {1579, 81958164, false, 81962898, "0.001898"},
    {1583, 82056758, true, 82069414, "0.00505"},
    {1597, 84262416, false, 84270396, "0.003128"},
    {1601, 84905600, true, 84907200, "0.000624"},
    {1607, 85857563, true, 85868002, "0.004042"},
    {1609, 86185584, true, 86188800, "0.001242"},
    {1613, 86831992, true, 86835216, "0.001239"},
    {1619, 87799961, false, 87810478, "0.004012"},
    {1621, 88134480, true, 88136100, "0.000616"},
    {1627, 89664957, false, 89669022, "0.001535"},
    {1637, 90775096, false, 90778368, "0.001221"},
    {1657, 94151880, false, 94153536, "0.000603"},
    {1663, 95744496, false, 95756130, "0.004206"},
    {1667, 95868304, true, 95873302, "0.001798"},
    {1669, 96213576, false, 96218580, "0.001796"},
    {1693, 100438812, true, 100438812, "0"},
    {1697, 101152832, false, 101154528, "0.000588"},
    {1699, 102106683, false, 102110928, "0.00147"},
    {1709, 103315212, false, 103320336, "0.001754"},
    {1721, 105513400, true, 105516840, "0.001161"},
    {1723, 106495368, false, 106500534, "0.00174"},
    {1733, 107737328, false, 107744256, "0.002306"},
    {1741, 109245900, true, 109245900, "0"},
    {1747, 111008934, true, 111014172, "0.001716"},
    {1753, 111523560, true, 111525312, "0.00057"},
    {1759, 113303979, true, 113318922, "0.004829"},
    {1777, 116175264, true, 116178816, "0.001124"},
    {1783, 118012950, false, 118021860, "0.002802"},
    {1787, 118144793, false, 118156402, "0.003635"},
    {1789, 118546188, true, 118553340, "0.002234"},
    {1801, 120958200, false, 120960000, "0.000554"},
    {1811, 122974115, false, 122991310, "0.005242"},
    {1823, 125433768, false, 125457454, "0.007127"},
    {1831, 127802625, true, 127814520, "0.003548"},
    {1847, 130463281, true, 130488202, "0.007305"},
    {1861, 133481040, true, 133482900, "0.000537"},
    {1867, 135499590, true, 135503322, "0.00107"},
    {1871, 135629230, true, 135651670, "0.00641"},
    {1873, 136086912, true, 136086912, "0"},
    {1877, 136953628, false, 136963008, "0.002662"},
    {1879, 138118449, false, 138134412, "0.004521"},
    {1889, 139610048, true, 139611936, "0.000529"},
    {1901, 142291000, false, 142294800, "0.001051"},
    {1907, 143639972, false, 143649502, "0.00262"},
    {1913, 145006080, false, 145011816, "0.001567"},
    {1931, 149133030, false, 149152330, "0.005175"},
    {1933, 149612148, true, 149616012, "0.001034"},
    {1949, 153366040, false, 153369936, "0.001025"},
    {1951, 154611600, true, 154633050, "0.005635"},
    {1973, 159108848, false, 159116736, "0.002026"},
    {1979, 160561183, true, 160576018, "0.003787"},
    {1987, 163343535, false, 163352472, "0.002263"},
    {1993, 164011320, true, 164013312, "0.000501"},
    {1997, 164995348, false, 165005328, "0.002502"},
    {1999, 166316517, true, 166331502, "0.003749"},
  };
  for (const auto& row : t) {
    if (format_ratio(row.U, row.L, row.p) != row.ratio)
      throw std::logic_error("reference table: inconsistent ratio at p = " +
                             std::to_string(row.p));
  }
  return t;
}

}  // namespace

const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> table = make_table();
  return table;
}

const ReferenceRow* reference_row(std::uint64_t p) {
  for (const auto& row : reference_table())
    if (row.p == p) return &row;
  return nullptr;
}

bool is_annotated_discrepancy(std::uint64_t p) { return p % 12 == 7; }

}  // namespace galrep
