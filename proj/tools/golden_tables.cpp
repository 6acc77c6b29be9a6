#include "golden_tables.hpp"

namespace injscheme::golden {

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        // table 1: minimum-distance injection codes, M(n,k,d)
        {1, 7, 6, "4", "199", "", false},
        {1, 8, 6, "3", "1513", "", false},
        {1, 8, 7, "4", "1462", "", false},
        {1, 9, 7, "4", "2846", "", false},
        {1, 9, 8, "4", "12096", "", false},
        {1, 9, 8, "5", "2417", "", false},
        {1, 10, 7, "3", "27308", "", false},
        {1, 10, 8, "4", "26206", "", false},
        {1, 10, 8, "5", "5039", "", false},
        {1, 10, 9, "4", "92418", "", false},
        {1, 10, 9, "5", "19158", "", false},
        {1, 10, 9, "6", "4991", "", false},
        {1, 11, 8, "4", "52646", "", false},
        {1, 11, 9, "4", "256682", "", false},
        {1, 11, 9, "5", "47073", "", false},
        {1, 11, 10, "4", "936332", "", false},
        {1, 11, 10, "5", "185560", "", false},
        {1, 11, 10, "6", "42068", "", false},
        {1, 12, 8, "3", "602579", "", false},
        {1, 12, 9, "4", "584327", "", false},
        {1, 12, 10, "4", "2699260", "", false},
        {1, 12, 10, "5", "471981", "", false},
        {1, 12, 11, "4", "10241521", "", false},
        {1, 12, 11, "5", "1922527", "", false},
        {1, 12, 11, "6", "411090", "", false},
        {1, 13, 9, "4", "1185053", "", false},
        {1, 13, 12, "4", "123235550", "", false},
        {1, 13, 12, "5", "23347599", "", false},
        {1, 13, 12, "6", "4687470", "", false},
        {1, 13, 12, "7", "910371", "", false},
        {1, 14, 13, "4", "1621775700", "", false},
        {1, 14, 13, "5", "309490273", "", false},
        {1, 14, 13, "6", "58903464", "", false},
        {1, 14, 13, "7", "10510496", "", false},
        {1, 14, 13, "8", "2117618", "", false},
        {1, 15, 14, "4", "23358981663", "", false},
        {1, 15, 14, "5", "4130012797", "", false},
        {1, 15, 14, "6", "804830167", "", false},
        {1, 15, 14, "7", "138132435", "", false},
        {1, 15, 14, "8", "24260981", "", false},

        // table 2: minimum-distance permutation codes, M(n,d)
        {2, 11, 11, "4", "3326400", "", true},
        {2, 11, 11, "6", "158617", "", false},
        {2, 11, 11, "7", "36718", "", false},
        {2, 12, 12, "4", "39916800", "", true},
        {2, 12, 12, "5", "6141046", "", false},
        {2, 12, 12, "6", "1766160", "", false},
        {2, 12, 12, "7", "361395", "", false},
        {2, 13, 13, "4", "411555972", "", false},
        {2, 13, 13, "5", "75789397", "", false},
        {2, 13, 13, "6", "21621600", "", false},
        {2, 13, 13, "7", "4163390", "", false},
        {2, 13, 13, "8", "879527", "", false},
        {2, 14, 14, "4", "5298680543", "", false},
        {2, 14, 14, "5", "918752861", "", false},
        {2, 14, 14, "6", "255869198", "", false},
        {2, 14, 14, "7", "53744475", "", false},
        {2, 14, 14, "8", "9901953", "", false},
        {2, 14, 14, "9", "2083046", "", false},
        {2, 15, 15, "4", "78702624000", "", false},
        {2, 15, 15, "5", "12053059200", "", false},
        {2, 15, 15, "6", "3511921683", "", false},
        {2, 15, 15, "7", "773606486", "", false},
        {2, 15, 15, "8", "130245681", "", false},
        {2, 15, 15, "9", "23627561", "", false},

        // table 3: equidistant injection codes, M(n,k,{d}) with Triv
        {3, 5, 3, "2", "5", "6", false},
        {3, 5, 4, "3", "6", "7", false},
        {3, 7, 3, "2", "8", "9", false},
        {3, 7, 4, "2", "9", "10", false},
        {3, 7, 5, "3", "14", "15", false},
        {3, 7, 6, "3", "13", "14", false},
        {3, 7, 6, "4", "26", "30", false},
        {3, 8, 6, "3", "20", "21", false},
        {3, 8, 6, "4", "37", "40", false},
        {3, 8, 7, "4", "30", "32", false},
        {3, 8, 7, "5", "45", "52", false},
        {3, 9, 6, "3", "28", "29", false},
        {3, 9, 6, "4", "42", "45", false},
        {3, 9, 7, "3", "26", "30", false},
        {3, 9, 8, "3", "20", "21", false},
        {3, 9, 8, "4", "40", "44", false},
        {3, 9, 8, "6", "59", "72", false},
        {3, 10, 4, "3", "18", "19", false},
        {3, 10, 6, "3", "35", "36", false},
        {3, 10, 6, "4", "47", "49", false},
        {3, 10, 7, "3", "40", "42", false},
        {3, 10, 7, "4", "77", "78", false},
        {3, 10, 7, "5", "83", "87", false},
        {3, 10, 8, "3", "30", "33", false},
        {3, 10, 8, "6", "92", "107", false},
        {3, 10, 9, "3", "22", "23", false},
        {3, 10, 9, "4", "47", "58", false},
        {3, 10, 9, "5", "92", "95", false},
        {3, 10, 9, "7", "75", "96", false},
        {3, 11, 4, "3", "20", "21", false},
        {3, 11, 6, "3", "42", "43", false},
        {3, 11, 6, "4", "53", "54", false},
        {3, 11, 7, "3", "49", "52", false},
        {3, 11, 7, "4", "94", "100", false},
        {3, 11, 7, "5", "87", "93", false},
        {3, 11, 8, "3", "48", "52", false},
        {3, 11, 8, "6", "142", "143", false},
        {3, 11, 9, "3", "33", "38", false},
        {3, 11, 9, "6", "117", "119", false},
        {3, 11, 9, "7", "108", "141", false},
        {3, 11, 9, "8", "60", "61", false},
        {3, 11, 10, "4", "52", "67", false},
        {3, 11, 10, "5", "108", "132", false},
        {3, 11, 10, "6", "187", "189", false},
        {3, 11, 10, "8", "93", "123", false},
        {3, 12, 5, "2", "23", "24", false},
        {3, 12, 6, "2", "26", "27", false},
        {3, 12, 6, "3", "49", "50", false},
        {3, 12, 7, "3", "60", "61", false},
        {3, 12, 7, "4", "104", "114", false},
        {3, 12, 7, "5", "92", "96", false},
        {3, 12, 8, "3", "66", "67", false},
        {3, 12, 8, "6", "146", "156", false},
        {3, 12, 9, "3", "53", "57", false},
        {3, 12, 9, "4", "115", "116", false},
        {3, 12, 9, "7", "166", "191", false},
        {3, 12, 10, "3", "38", "43", false},
        {3, 12, 10, "4", "114", "119", false},
        {3, 12, 10, "5", "199", "201", false},
        {3, 12, 10, "6", "212", "214", false},
        {3, 12, 10, "7", "166", "168", false},
        {3, 12, 10, "8", "126", "180", false},
        {3, 12, 10, "9", "76", "77", false},
        {3, 12, 11, "3", "28", "29", false},
        {3, 12, 11, "4", "56", "75", false},
        {3, 12, 11, "5", "120", "150", false},
        {3, 12, 11, "6", "393", "394", false},
        {3, 12, 11, "7", "317", "324", false},
        {3, 12, 11, "9", "112", "153", false},

        // table 4: explicit distance sets, M(n,k,D) with Triv
        {4, 5, 3, "1,3", "10", "12", false},
        {4, 5, 4, "1,3", "9", "10", false},
        {4, 5, 4, "2,4", "12", "13", false},
        {4, 5, 4, "1,2,4", "17", "20", false},
        {4, 5, 4, "1,3,4", "29", "30", false},
        {4, 6, 3, "1,3", "16", "17", false},
        {4, 6, 5, "1,4", "23", "26", false},
        {4, 6, 5, "2,4", "17", "19", false},
        {4, 6, 5, "2,5", "22", "23", false},
        {4, 6, 5, "3,4", "20", "21", false},
        {4, 6, 5, "3,5", "25", "26", false},
        {4, 6, 5, "1,2,4", "27", "28", false},
        {4, 6, 5, "1,3,4", "31", "32", false},
        {4, 6, 5, "1,2,5", "34", "36", false},
        {4, 6, 5, "1,3,5", "37", "42", false},
        {4, 6, 5, "1,4,5", "56", "60", false},
        {4, 6, 5, "2,3,5", "27", "31", false},
        {4, 6, 5, "2,4,5", "52", "55", false},
        {4, 6, 5, "1,2,3,5", "53", "55", false},
        {4, 6, 5, "1,2,4,5", "68", "72", false},
        {4, 7, 3, "1,3", "23", "26", false},
        {4, 7, 4, "1,3", "22", "23", false},
        {4, 7, 4, "1,4", "24", "25", false},
        {4, 7, 4, "2,3", "33", "35", false},
        {4, 7, 4, "2,4", "36", "38", false},
        {4, 7, 4, "1,2,4", "72", "76", false},
        {4, 7, 4, "1,3,4", "84", "93", false},
        {4, 7, 5, "1,4", "39", "40", false},
        {4, 7, 5, "1,5", "19", "20", false},
        {4, 7, 5, "2,4", "34", "36", false},
        {4, 7, 5, "2,5", "45", "47", false},
        {4, 7, 5, "3,4", "35", "36", false},
        {4, 7, 5, "3,5", "38", "40", false},
        {4, 7, 5, "1,2,4", "62", "66", false},
        {4, 7, 5, "1,3,4", "53", "56", false},
        {4, 7, 5, "1,2,5", "69", "72", false},
        {4, 7, 5, "1,3,5", "69", "74", false},
        {4, 7, 5, "1,4,5", "111", "114", false},
        {4, 7, 5, "2,3,4", "125", "132", false},
        {4, 7, 5, "2,3,5", "63", "64", false},
        {4, 7, 5, "2,4,5", "116", "120", false},
        {4, 7, 5, "1,2,3,5", "158", "168", false},
        {4, 7, 5, "1,2,4,5", "168", "180", false},
        {4, 7, 6, "1,3", "15", "18", false},
        {4, 7, 6, "1,4", "37", "46", false},
        {4, 7, 6, "1,5", "40", "42", false},
        {4, 7, 6, "2,4", "28", "35", false},
        {4, 7, 6, "2,5", "41", "42", false},
        {4, 7, 6, "3,4", "34", "36", false},
        {4, 7, 6, "3,5", "41", "43", false},
        {4, 7, 6, "3,6", "47", "48", false},
        {4, 7, 6, "4,5", "31", "34", false},
        {4, 7, 6, "4,6", "64", "70", false},
        {4, 7, 6, "1,2,4", "37", "46", false},
        {4, 7, 6, "1,3,4", "52", "60", false},
        {4, 7, 6, "1,2,5", "71", "78", false},
        {4, 7, 6, "1,3,5", "58", "60", false},
        {4, 7, 6, "1,4,5", "58", "61", false},
        {4, 7, 6, "1,2,6", "40", "41", false},
        {4, 7, 6, "1,3,6", "74", "75", false},
        {4, 7, 6, "1,4,6", "110", "120", false},
        {4, 7, 6, "2,3,5", "42", "45", false},
        {4, 7, 6, "2,4,5", "67", "68", false},
        {4, 7, 6, "2,3,6", "82", "86", false},
        {4, 7, 6, "2,4,6", "83", "86", false},
        {4, 7, 6, "2,5,6", "84", "96", false},
        {4, 7, 6, "3,4,5", "122", "126", false},
        {4, 7, 6, "3,4,6", "64", "70", false},
        {4, 7, 6, "3,5,6", "108", "136", false},
        {4, 7, 6, "1,2,3,5", "72", "78", false},
        {4, 7, 6, "1,2,4,5", "105", "107", false},
        {4, 7, 6, "1,3,4,5", "151", "152", false},
        {4, 7, 6, "1,2,3,6", "146", "162", false},
        {4, 7, 6, "1,2,4,6", "117", "122", false},
        {4, 7, 6, "1,3,4,6", "118", "122", false},
        {4, 7, 6, "1,2,5,6", "140", "148", false},
        {4, 7, 6, "1,3,5,6", "141", "180", false},
        {4, 7, 6, "2,3,4,6", "118", "126", false},
        {4, 7, 6, "2,3,5,6", "108", "136", false},
        {4, 7, 6, "2,4,5,6", "280", "336", false},
        {4, 7, 6, "1,2,3,4,6", "233", "240", false},
        {4, 7, 6, "1,2,3,5,6", "168", "193", false},
        {4, 7, 6, "1,2,4,5,6", "360", "387", false},
    };
    return rows;
}

}  // namespace injscheme::golden
