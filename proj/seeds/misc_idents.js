let alpha = 1;
let beta = 2;
let gamma = 3;
let delta = 4;
let epsilon = 5;
let zeta = 7;
let eta = 8;
let theta = 9;
let iota = 15;
let kappa = 16;
let lambda = 17;
let mu = 31;
let nu = 32;
let xi = 33;
let omicron = 63;
let rho = 64;
print(alpha + beta + gamma + delta + epsilon + zeta + eta + theta);
print(iota + kappa + lambda + mu + nu + xi + omicron + rho);
