let nums = [1, 2, 3];
print(nums.length);
print(nums[0]);
print(nums[2]);
