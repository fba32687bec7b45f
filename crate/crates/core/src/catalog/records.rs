//! Raw data for the 52 finite exception records.
//!
//! Witnesses are digit strings over 1-based labels (orders here never exceed
//! 8). A few fields carry reconciliation flags: the stored value disagrees
//! with one printed source value but is forced by the surrounding data, and
//! the validator surfaces the flag instead of failing the record.

pub(crate) struct RawRecord {
    pub id: &'static str,
    pub figure: &'static str,
    pub blocks: &'static [usize],
    /// 1-based labels of the non-origin set S.
    pub s: &'static [usize],
    pub witnesses: &'static [&'static str],
    pub flags: &'static [&'static str],
}

macro_rules! rec {
    ($id:literal, $fig:literal, [$($b:literal),+], [$($s:literal),+], [$($w:literal),*] $(, $flag:literal)*) => {
        RawRecord {
            id: $id,
            figure: $fig,
            blocks: &[$($b),+],
            s: &[$($s),+],
            witnesses: &[$($w),*],
            flags: &[$($flag),*],
        }
    };
}

pub(crate) const RAW_RECORDS: [RawRecord; 52] = [
    rec!("Exc0", "3A", [1, 1], [1, 2, 3], []),
    rec!("Exc1", "4A", [1, 1, 1], [1, 2, 3], ["4213"]),
    rec!("Exc2", "4A", [1, 2], [3, 4], ["1324", "2314"]),
    rec!("Exc3", "4A", [2, 1], [1, 2], ["3421", "4132"]),
    rec!("Exc4", "5A", [1, 1, 1, 1], [1, 2, 3, 4, 5], []),
    rec!("Exc5", "5B", [2, 1, 1], [1, 2, 3], ["45213", "51423"]),
    rec!("Exc6", "5C", [1, 1, 2], [4, 5], ["12534", "23514", "31524"]),
    rec!(
        "Exc7",
        "5C",
        [2, 1, 1],
        [1, 2, 3, 4],
        ["51423"],
        "witness-reconciled"
    ),
    rec!(
        "Exc8",
        "5D",
        [1, 1, 1, 1],
        [2, 5],
        ["12543", "35124", "42153"]
    ),
    rec!(
        "Exc9",
        "5E",
        [1, 1, 1, 1],
        [2, 4, 5],
        ["12453", "35421"],
        "s-set-reconciled"
    ),
    rec!(
        "Exc10",
        "5E",
        [1, 2, 1],
        [3, 5],
        ["12435", "23145", "45312"]
    ),
    rec!("Exc11", "5E", [2, 2], [1, 2], ["34215", "42315", "52314"]),
    rec!(
        "Exc12",
        "5E",
        [1, 1, 2],
        [1, 2],
        ["35412", "41523", "51423"]
    ),
    rec!(
        "Exc13",
        "6A",
        [3, 1, 1],
        [3, 4],
        ["156324", "256143", "562341", "612345"]
    ),
    rec!(
        "Exc14",
        "6B",
        [2, 1, 1, 1],
        [3, 4],
        ["154326", "254316", "562143", "612345"]
    ),
    rec!(
        "Exc15",
        "6C",
        [1, 1, 2, 1],
        [1, 2, 3, 6],
        ["435261", "534261"]
    ),
    rec!(
        "Exc16",
        "6C",
        [1, 2, 1, 1],
        [4, 5, 6],
        ["163425", "263415", "362415"]
    ),
    rec!(
        "Exc17",
        "6D",
        [2, 1, 1, 1],
        [2, 4, 6],
        ["124365", "346521", "562143"]
    ),
    rec!(
        "Exc18",
        "6D",
        [1, 2, 2],
        [2, 4, 6],
        ["126345", "341562", "564123"]
    ),
    rec!(
        "Exc19",
        "6D",
        [1, 1, 1, 2],
        [2, 4, 6],
        ["125643", "341265", "563421"],
        "witness-reconciled"
    ),
    rec!(
        "Exc20",
        "6E",
        [1, 1, 1, 1, 1],
        [1, 2],
        ["341256", "465213", "516324", "621435"]
    ),
    rec!(
        "Exc21",
        "6E",
        [2, 1, 1, 1],
        [1, 2],
        ["346521", "452136", "562143", "634125"]
    ),
    rec!(
        "Exc22",
        "6F",
        [1, 1, 1, 1, 1],
        [1, 2, 3],
        ["421563", "532641", "613452"]
    ),
    rec!(
        "Exc23",
        "6G",
        [1, 1, 1, 1, 1],
        [4, 6],
        ["145632", "216453", "326415", "546132"]
    ),
    rec!(
        "Exc24",
        "6H",
        [1, 1, 1, 1, 1],
        [1, 2, 3, 4],
        ["543162", "613425"]
    ),
    rec!(
        "Exc25",
        "6H",
        [1, 1, 1, 2],
        [4, 5],
        ["142536", "243516", "341526", "613452"]
    ),
    rec!(
        "Exc26",
        "6H",
        [1, 1, 3],
        [4, 5, 6],
        ["145623", "245631", "345612"]
    ),
    rec!(
        "Exc27",
        "6H",
        [1, 3, 1],
        [4, 6],
        ["126534", "236514", "316524", "543261"]
    ),
    rec!(
        "Exc28",
        "6H",
        [2, 1, 2],
        [4, 5],
        ["124563", "234561", "314562", "614235"]
    ),
    rec!(
        "Exc29",
        "6I",
        [1, 1, 1, 1, 1],
        [4, 6],
        ["145632", "213654", "365421", "546231"]
    ),
    rec!(
        "Exc30",
        "6J",
        [1, 1, 1, 1, 1],
        [4, 6],
        ["162453", "261453", "312465", "542631"]
    ),
    rec!(
        "Exc31",
        "6K",
        [1, 2, 2],
        [3, 4],
        ["146532", "246531", "541632", "634125"]
    ),
    rec!(
        "Exc32",
        "6L",
        [1, 2, 1, 1],
        [5, 6],
        ["163425", "263415", "361425", "456132"]
    ),
    rec!("Exc33", "7A", [1, 1, 1, 1, 1, 1], [1, 2, 3, 4, 5, 6, 7], []),
    rec!(
        "Exc34",
        "7B",
        [1, 1, 2, 1, 1],
        [1, 2, 3],
        ["4576132", "5674132", "6475132", "7541263"]
    ),
    rec!(
        "Exc35",
        "7B",
        [2, 1, 3],
        [1, 2, 3],
        ["4315627", "5316427", "6314527", "7435612"]
    ),
    rec!(
        "Exc36",
        "7B",
        [2, 3, 1],
        [1, 2],
        ["3125476", "4567132", "5647132", "6457132", "7421356"]
    ),
    rec!(
        "Exc37",
        "7C",
        [1, 1, 1, 1, 1, 1],
        [4, 5, 6],
        ["1243567", "2341567", "3142567", "7541632"]
    ),
    rec!(
        "Exc38",
        "7C",
        [1, 1, 2, 1, 1],
        [1, 2, 3],
        ["4156327", "5164327", "6145327", "7541263"]
    ),
    rec!(
        "Exc39",
        "7C",
        [2, 1, 3],
        [1, 2, 3],
        ["4315627", "5316427", "6314527", "7435612"]
    ),
    rec!(
        "Exc40",
        "7D",
        [1, 1, 1, 2, 1],
        [1, 2],
        ["3412756", "4512736", "5312746", "6215437", "7215436"]
    ),
    rec!(
        "Exc41",
        "7D",
        [1, 1, 1, 3],
        [6, 7],
        ["1546327", "2546317", "3745216", "4753216", "5734216"]
    ),
    rec!(
        "Exc42",
        "7D",
        [2, 2, 1, 1],
        [6, 7],
        ["1342675", "2341675", "3465127", "4563127", "5364127"]
    ),
    rec!(
        "Exc43",
        "7E",
        [1, 1, 2, 1, 1],
        [2, 7],
        ["1236745", "3214756", "4213756", "5213746", "6734215"]
    ),
    rec!(
        "Exc44",
        "7F",
        [1, 1, 1, 3],
        [6, 7],
        ["1732546", "2713546", "3721546", "4127635", "5127634"],
        "figure-reconciled"
    ),
    rec!(
        "Exc45",
        "7G",
        [2, 1, 2, 1],
        [1, 7],
        ["2654317", "3654721", "4367125", "5367124", "6517234"]
    ),
    rec!(
        "Exc46",
        "7H",
        [2, 2, 2],
        [4, 7],
        ["1746532", "2746531", "3126574", "5321674", "6247531"]
    ),
    rec!(
        "Exc47",
        "7I",
        [1, 1, 2, 1, 1],
        [4, 5, 7],
        ["1456237", "2456137", "3456127", "6135427"]
    ),
    rec!(
        "Exc48",
        "7J",
        [1, 1, 2, 1, 1],
        [1, 2],
        ["3245167", "4235167", "5234167", "6234157", "7234156"]
    ),
    rec!(
        "Exc49",
        "8A",
        [1, 1, 1, 1, 1, 1, 1],
        [1, 2],
        ["35461278", "46527183", "56487213", "67341285", "74358216", "85347216"]
    ),
    rec!(
        "Exc50",
        "8A",
        [2, 1, 1, 1, 1, 1],
        [1, 2],
        ["34652718", "46752138", "56734128", "68214375", "78216453", "83412576"]
    ),
    rec!(
        "Exc51",
        "8B",
        [2, 1, 2, 1, 1],
        [2, 8],
        ["13245867", "32145867", "42156873", "52164873", "62145873", "73245861"]
    ),
];
