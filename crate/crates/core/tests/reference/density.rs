// Generated by tests/oracles/density_reference.py; do not edit.
// (mu, x, t, density for index -mu)
pub const DENSITY: &[(f64, f64, f64, f64)] = &[
    (0.0, 1.5, 0.1, 1.486545580494516),
    (0.0, 1.5, 1.0, 1.5095249021764065e-1),
    (0.0, 1.5, 10.0, 6.21857734759057e-3),
    (0.0, 1.5, 100.0, 2.7662059142098374e-4),
    (0.0, 2.0, 0.1, 6.045974638602498e-2),
    (0.0, 2.0, 1.0, 1.7861386237231055e-1),
    (0.0, 2.0, 10.0, 1.0262723716023775e-2),
    (0.0, 2.0, 100.0, 4.7131815291716297e-4),
    (0.0, 10.0, 1.0, 2.9604574984298861e-18),
    (0.0, 10.0, 10.0, 6.8215441127492175e-4),
    (0.0, 10.0, 100.0, 1.0760010628266647e-3),
    (0.3, 1.5, 0.1, 1.6743617726770222),
    (0.3, 1.5, 1.0, 1.6749385946773537e-1),
    (0.3, 1.5, 10.0, 6.5308426999226988e-3),
    (0.3, 1.5, 100.0, 2.572049156003408e-4),
    (0.3, 2.0, 0.1, 7.4277894128098552e-2),
    (0.3, 2.0, 1.0, 2.1652131227806798e-1),
    (0.3, 2.0, 10.0, 1.1795500643093476e-2),
    (0.3, 2.0, 100.0, 4.7992680027342587e-4),
    (0.3, 10.0, 1.0, 5.8818080670710627e-18),
    (0.3, 10.0, 10.0, 1.3191696155999991e-3),
    (0.3, 10.0, 100.0, 1.8876266212905149e-3),
    (0.75, 1.5, 0.1, 1.9816193907917104),
    (0.75, 1.5, 1.0, 1.8324913353815866e-1),
    (0.75, 1.5, 10.0, 5.3813436993081918e-3),
    (0.75, 1.5, 100.0, 1.1780745320525399e-4),
    (0.75, 2.0, 0.1, 1.0034963712968109e-1),
    (0.75, 2.0, 1.0, 2.7272566785369722e-1),
    (0.75, 2.0, 10.0, 1.1291103999196129e-2),
    (0.75, 2.0, 100.0, 2.5623536461344663e-4),
    (0.75, 10.0, 1.0, 1.621109439590322e-17),
    (0.75, 10.0, 10.0, 3.1599879106378373e-3),
    (0.75, 10.0, 100.0, 2.8153075013275522e-3),
    (1.0, 1.5, 0.1, 2.1648275732454256),
    (1.0, 1.5, 1.0, 1.8618240937164932e-1),
    (1.0, 1.5, 10.0, 4.2369848511655149e-3),
    (1.0, 1.5, 100.0, 5.7502034713244025e-5),
    (1.0, 2.0, 0.1, 1.1811978427207973e-1),
    (1.0, 2.0, 1.0, 3.0091627502789911e-1),
    (1.0, 2.0, 10.0, 9.7347510423788099e-3),
    (1.0, 2.0, 100.0, 1.3735554034378378e-4),
    (1.0, 10.0, 1.0, 2.8238218779888753e-17),
    (1.0, 10.0, 10.0, 4.8450408371890786e-3),
    (1.0, 10.0, 100.0, 2.917174428702062e-3),
    (1.5, 1.5, 0.1, 2.5551501513598025),
    (1.5, 1.5, 1.0, 1.7881673230074634e-1),
    (1.5, 1.5, 10.0, 2.0386463530745915e-3),
    (1.5, 1.5, 100.0, 9.0135382168300895e-6),
    (1.5, 2.0, 0.1, 1.6222740534145289e-1),
    (1.5, 2.0, 1.0, 3.4392974222004693e-1),
    (1.5, 2.0, 10.0, 5.7049601074169489e-3),
    (1.5, 2.0, 100.0, 2.6414843193489462e-5),
    (1.5, 10.0, 1.0, 8.4182358324482828e-17),
    (1.5, 10.0, 10.0, 1.014409705045778e-2),
    (1.5, 10.0, 100.0, 2.3700009613713956e-3),
    (2.5, 1.5, 0.1, 3.4054814648419564),
    (2.5, 1.5, 1.0, 1.2461840739171683e-1),
    (2.5, 1.5, 10.0, 2.1157811849149431e-4),
    (2.5, 1.5, 100.0, 8.5407327288319625e-8),
    (2.5, 2.0, 0.1, 2.954599508928278e-1),
    (2.5, 2.0, 1.0, 3.5169894583288356e-1),
    (2.5, 2.0, 10.0, 9.2968384059073511e-4),
    (2.5, 2.0, 100.0, 3.9867057347109389e-7),
    (2.5, 10.0, 1.0, 6.9744933462102664e-16),
    (2.5, 10.0, 10.0, 2.9745210712985831e-2),
    (2.5, 10.0, 100.0, 7.9843215960348629e-4),
    (3.3, 1.5, 0.1, 4.1075597543169392),
    (3.3, 1.5, 1.0, 7.2364883282798811e-2),
    (3.3, 1.5, 10.0, 2.0527945967750881e-5),
    (3.3, 1.5, 100.0, 1.2577782415214102e-9),
    (3.3, 2.0, 0.1, 4.6154516682714271e-1),
    (3.3, 2.0, 1.0, 2.8683632762669458e-1),
    (3.3, 2.0, 10.0, 1.3503161412461602e-4),
    (3.3, 2.0, 100.0, 8.8565428753577371e-9),
    (3.3, 10.0, 1.0, 3.5418045101643235e-15),
    (3.3, 10.0, 10.0, 5.1624763031029695e-2),
    (3.3, 10.0, 100.0, 2.2759520149947179e-4),
];
