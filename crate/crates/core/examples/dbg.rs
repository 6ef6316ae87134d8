use splitmat::*;
fn main() {
    let m = Matroid::from_nonbases(
        6, 3,
        [[1,3,4],[2,3,4],[3,4,5],[3,4,6],[1,5,6],[2,5,6],[3,5,6],[4,5,6]].map(Subset::from_elems),
    ).unwrap();
    println!("connected: {}", m.is_connected());
    for f in flacets(&m).unwrap() {
        println!("flacet {} rank {}", f.elements, f.rank);
    }
    println!("--- all flats:");
    for f in m.flats() {
        let r = m.restriction(f.elements).map(|x| x.is_connected());
        let c = m.contraction(f.elements).map(|x| x.is_connected());
        println!("flat {} rank {} | restr conn {:?} contr conn {:?}", f.elements, f.rank, r, c);
    }
}
