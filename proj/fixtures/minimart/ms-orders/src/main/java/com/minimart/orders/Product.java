package com.minimart.orders;

import lombok.Data;

@Data
public class Product {
    private Long id;
    private String name;
}
