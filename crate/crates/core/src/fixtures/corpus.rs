// Multiplication tables of the bundled reference rings.
//
// Each block is printed in product-row layout: row r of block i lists the
// coefficients of x_i * x_r. `FusionRing::from_product_rows` transposes.

pub const RANK6_NC: [[[u8; 6]; 6]; 6] = [
    [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0],
        [1, 4, 2, 2, 2, 2],
        [0, 2, 2, 1, 2, 4],
        [0, 2, 1, 2, 4, 2],
        [0, 2, 2, 4, 5, 4],
        [0, 2, 4, 2, 4, 5],
    ],
    [
        [0, 0, 1, 0, 0, 0],
        [0, 2, 2, 1, 4, 2],
        [0, 1, 3, 1, 3, 3],
        [1, 2, 3, 3, 1, 3],
        [0, 2, 3, 3, 5, 4],
        [0, 4, 1, 3, 4, 5],
    ],
    [
        [0, 0, 0, 1, 0, 0],
        [0, 2, 1, 2, 2, 4],
        [1, 2, 3, 3, 3, 1],
        [0, 1, 1, 3, 3, 3],
        [0, 4, 3, 1, 5, 4],
        [0, 2, 3, 3, 4, 5],
    ],
    [
        [0, 0, 0, 0, 1, 0],
        [0, 2, 4, 2, 5, 4],
        [0, 4, 1, 3, 5, 4],
        [0, 2, 3, 3, 5, 4],
        [1, 5, 5, 5, 5, 7],
        [0, 4, 4, 4, 7, 7],
    ],
    [
        [0, 0, 0, 0, 0, 1],
        [0, 2, 2, 4, 4, 5],
        [0, 2, 3, 3, 4, 5],
        [0, 4, 3, 1, 4, 5],
        [0, 4, 4, 4, 7, 7],
        [1, 5, 5, 5, 7, 5],
    ],
];

pub const K7: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 1, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 1],
        [1, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
        [1, 0, 1, 1, 0, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK7_EXTRA_1: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 1, 0, 0, 1, 1, 1],
        [1, 0, 1, 1, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 1, 1],
        [1, 1, 0, 1, 0, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK7_EXTRA_2: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 2, 2],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 2, 1, 1, 1, 1, 1],
        [0, 2, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 1, 1],
        [1, 1, 1, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 1],
        [1, 1, 0, 1, 0, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 2, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 2, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK7_EXTRA_3: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 1, 1, 1, 2, 3, 3],
        [0, 1, 1, 2, 1, 1, 1],
        [0, 1, 2, 1, 2, 2, 2],
        [0, 2, 1, 2, 1, 1, 1],
        [0, 3, 1, 2, 1, 1, 1],
        [0, 3, 1, 2, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 1, 1, 2, 1, 1, 1],
        [1, 1, 0, 1, 0, 1, 1],
        [0, 2, 1, 0, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 1, 2, 1, 2, 2, 2],
        [0, 2, 1, 0, 1, 1, 1],
        [1, 1, 0, 2, 1, 2, 2],
        [0, 2, 1, 1, 1, 1, 1],
        [0, 2, 1, 2, 1, 1, 1],
        [0, 2, 1, 2, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 2, 1, 2, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 2, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 3, 1, 2, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 2, 1, 2, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 3, 1, 2, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 2, 1, 2, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK7_EXTRA_4: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 4, 2, 4, 3, 4, 4],
        [0, 2, 1, 3, 1, 1, 1],
        [0, 4, 3, 3, 3, 3, 3],
        [0, 3, 1, 3, 1, 1, 1],
        [0, 4, 1, 3, 1, 1, 1],
        [0, 4, 1, 3, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 2, 1, 3, 1, 1, 1],
        [1, 1, 0, 1, 0, 1, 1],
        [0, 3, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 4, 3, 3, 3, 3, 3],
        [0, 3, 1, 1, 1, 1, 1],
        [1, 3, 1, 4, 2, 3, 3],
        [0, 3, 1, 2, 1, 1, 1],
        [0, 3, 1, 3, 1, 1, 1],
        [0, 3, 1, 3, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 3, 1, 3, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1],
        [0, 3, 1, 2, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 4, 1, 3, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 3, 1, 3, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 4, 1, 3, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 3, 1, 3, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK7_EXTRA_5: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 1, 1],
        [0, 1, 3, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 1, 3, 1, 1, 1, 1],
        [1, 3, 0, 3, 4, 5, 5],
        [0, 1, 3, 1, 1, 1, 1],
        [0, 1, 4, 1, 1, 1, 1],
        [0, 1, 5, 1, 1, 1, 1],
        [0, 1, 5, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 1],
        [0, 1, 3, 1, 1, 1, 1],
        [1, 0, 1, 1, 0, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 4, 1, 1, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 5, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 5, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK7_EXTRA_6: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 0, 1, 1, 0, 1, 1],
        [0, 1, 3, 2, 1, 1, 1],
        [0, 1, 2, 0, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 1, 3, 2, 1, 1, 1],
        [1, 3, 3, 3, 4, 5, 5],
        [0, 2, 3, 3, 2, 2, 2],
        [0, 1, 4, 2, 1, 1, 1],
        [0, 1, 5, 2, 1, 1, 1],
        [0, 1, 5, 2, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 1, 2, 0, 1, 1, 1],
        [0, 2, 3, 3, 2, 2, 2],
        [1, 0, 3, 0, 1, 2, 2],
        [0, 1, 2, 1, 1, 1, 1],
        [0, 1, 2, 2, 1, 1, 1],
        [0, 1, 2, 2, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 4, 2, 1, 1, 1],
        [0, 1, 2, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 5, 2, 1, 1, 1],
        [0, 1, 2, 2, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 5, 2, 1, 1, 1],
        [0, 1, 2, 2, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK7_EXTRA_7: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 5, 5, 3, 3, 4, 4],
        [0, 5, 3, 4, 3, 3, 3],
        [0, 3, 4, 0, 2, 2, 2],
        [0, 3, 3, 2, 1, 1, 1],
        [0, 4, 3, 2, 1, 1, 1],
        [0, 4, 3, 2, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 5, 3, 4, 3, 3, 3],
        [1, 3, 1, 5, 3, 4, 4],
        [0, 4, 5, 0, 0, 0, 0],
        [0, 3, 3, 0, 1, 1, 1],
        [0, 3, 4, 0, 1, 1, 1],
        [0, 3, 4, 0, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 3, 4, 0, 2, 2, 2],
        [0, 4, 5, 0, 0, 0, 0],
        [1, 0, 0, 2, 2, 3, 3],
        [0, 2, 0, 2, 1, 1, 1],
        [0, 2, 0, 3, 1, 1, 1],
        [0, 2, 0, 3, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 3, 3, 2, 1, 1, 1],
        [0, 3, 3, 0, 1, 1, 1],
        [0, 2, 0, 2, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 4, 3, 2, 1, 1, 1],
        [0, 3, 4, 0, 1, 1, 1],
        [0, 2, 0, 3, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 4, 3, 2, 1, 1, 1],
        [0, 3, 4, 0, 1, 1, 1],
        [0, 2, 0, 3, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK7_EXTRA_8: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 1, 1],
        [0, 1, 4, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 1, 4, 1, 1, 1, 1],
        [1, 4, 4, 4, 5, 6, 6],
        [0, 1, 4, 1, 1, 1, 1],
        [0, 1, 5, 1, 1, 1, 1],
        [0, 1, 6, 1, 1, 1, 1],
        [0, 1, 6, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 1],
        [0, 1, 4, 1, 1, 1, 1],
        [1, 0, 1, 1, 0, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 5, 1, 1, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 6, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 6, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK7_EXTRA_9: [[[u8; 7]; 7]; 7] = [
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 1, 5, 4, 3, 4, 4],
        [0, 5, 2, 5, 1, 1, 1],
        [0, 4, 5, 2, 3, 3, 3],
        [0, 3, 1, 3, 1, 1, 1],
        [0, 4, 1, 3, 1, 1, 1],
        [0, 4, 1, 3, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0],
        [0, 5, 2, 5, 1, 1, 1],
        [1, 2, 1, 2, 3, 4, 4],
        [0, 5, 2, 3, 2, 2, 2],
        [0, 1, 3, 2, 1, 1, 1],
        [0, 1, 4, 2, 1, 1, 1],
        [0, 1, 4, 2, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 4, 5, 2, 3, 3, 3],
        [0, 5, 2, 3, 2, 2, 2],
        [1, 2, 3, 6, 2, 3, 3],
        [0, 3, 2, 2, 1, 1, 1],
        [0, 3, 2, 3, 1, 1, 1],
        [0, 3, 2, 3, 1, 1, 1],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 3, 1, 3, 1, 1, 1],
        [0, 1, 3, 2, 1, 1, 1],
        [0, 3, 2, 2, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [0, 1, 1, 1, 1, 1, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 4, 1, 3, 1, 1, 1],
        [0, 1, 4, 2, 1, 1, 1],
        [0, 3, 2, 3, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 1],
        [1, 1, 1, 1, 2, 0, 3],
        [0, 1, 1, 1, 1, 3, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 4, 1, 3, 1, 1, 1],
        [0, 1, 4, 2, 1, 1, 1],
        [0, 3, 2, 3, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 2],
        [0, 1, 1, 1, 1, 3, 1],
        [1, 1, 1, 1, 2, 1, 2],
    ],
];

pub const RANK8_1: [[[u8; 8]; 8]; 8] = [
    [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [1, 0, 0, 2, 2, 1, 2, 2],
        [0, 1, 1, 2, 0, 2, 2, 2],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [0, 1, 1, 2, 0, 2, 2, 2],
        [1, 0, 0, 0, 4, 1, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [1, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [1, 1, 1, 2, 2, 3, 0, 5],
        [0, 1, 1, 2, 2, 2, 5, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
        [0, 1, 1, 2, 2, 2, 5, 1],
        [1, 1, 1, 2, 2, 3, 1, 4],
    ],
];

pub const RANK8_2: [[[u8; 8]; 8]; 8] = [
    [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [1, 0, 0, 3, 1, 1, 2, 2],
        [0, 1, 1, 1, 1, 2, 2, 2],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [0, 1, 1, 1, 1, 2, 2, 2],
        [1, 0, 0, 1, 3, 1, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [1, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [1, 1, 1, 2, 2, 3, 0, 5],
        [0, 1, 1, 2, 2, 2, 5, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
        [0, 1, 1, 2, 2, 2, 5, 1],
        [1, 1, 1, 2, 2, 3, 1, 4],
    ],
];

pub const RANK8_3: [[[u8; 8]; 8]; 8] = [
    [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [1, 1, 1, 0, 3, 1, 2, 2],
        [0, 0, 0, 3, 0, 2, 2, 2],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 0, 0, 3, 0, 2, 2, 2],
        [1, 1, 1, 0, 3, 1, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [1, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [1, 1, 1, 2, 2, 3, 0, 5],
        [0, 1, 1, 2, 2, 2, 5, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
        [0, 1, 1, 2, 2, 2, 5, 1],
        [1, 1, 1, 2, 2, 3, 1, 4],
    ],
];

pub const RANK8_4: [[[u8; 8]; 8]; 8] = [
    [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [1, 1, 1, 1, 2, 1, 2, 2],
        [0, 0, 0, 2, 1, 2, 2, 2],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 0, 0, 2, 1, 2, 2, 2],
        [1, 1, 1, 1, 2, 1, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [1, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [1, 1, 1, 2, 2, 3, 0, 5],
        [0, 1, 1, 2, 2, 2, 5, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
        [0, 1, 1, 2, 2, 2, 5, 1],
        [1, 1, 1, 2, 2, 3, 1, 4],
    ],
];

pub const RANK8_5: [[[u8; 8]; 8]; 8] = [
    [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ],
    [
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 1, 1],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 1, 1, 2, 0, 2, 2, 2],
        [1, 0, 0, 2, 2, 1, 2, 2],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 1, 0, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 1, 1],
        [1, 0, 0, 2, 2, 1, 2, 2],
        [0, 1, 1, 0, 2, 2, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 2, 2, 2, 2],
        [0, 1, 1, 2, 1, 2, 2, 2],
        [1, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 3, 2],
        [1, 1, 1, 2, 2, 3, 0, 5],
        [0, 1, 1, 2, 2, 2, 5, 1],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 1, 1, 2, 2, 2, 2, 3],
        [0, 1, 1, 2, 2, 2, 5, 1],
        [1, 1, 1, 2, 2, 3, 1, 4],
    ],
];
