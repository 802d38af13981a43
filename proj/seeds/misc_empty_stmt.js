let idle = 16384;
;
print(idle);
;
let more = idle + 1;
print(more);
