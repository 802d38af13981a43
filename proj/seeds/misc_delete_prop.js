let crate = { label: "x", mass: 16383 };
print(crate.mass);
delete crate.label;
print(crate.mass);
